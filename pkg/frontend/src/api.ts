/** Thin typed client for the /v1 API.  No game rules live here: every
 * legality judgment comes back from the server. */

import type { CreateGameRequest, MoveDoc, Snapshot } from './types.js';

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function expectJson<T>(response: Response): Promise<T> {
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    const detail = (body as { error?: string }).error ?? response.statusText;
    throw new ApiError(response.status, detail);
  }
  return body as T;
}

export class GameClient {
  constructor(private baseUrl: string, private fetchImpl: typeof fetch = fetch) {}

  private url(path: string): string {
    return `${this.baseUrl.replace(/\/$/, '')}${path}`;
  }

  async createGame(request: CreateGameRequest): Promise<Snapshot> {
    const response = await this.fetchImpl(this.url('/v1/games'), {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(request),
    });
    return expectJson<Snapshot>(response);
  }

  async getGame(id: string): Promise<Snapshot> {
    return expectJson<Snapshot>(await this.fetchImpl(this.url(`/v1/games/${id}`)));
  }

  async postMove(id: string, move: MoveDoc): Promise<Snapshot> {
    const response = await this.fetchImpl(this.url(`/v1/games/${id}/moves`), {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(move),
    });
    return expectJson<Snapshot>(response);
  }

  async getHint(id: string): Promise<MoveDoc> {
    const body = await expectJson<{ move: MoveDoc }>(
      await this.fetchImpl(this.url(`/v1/games/${id}/hint`)));
    return body.move;
  }

  async deleteGame(id: string): Promise<void> {
    await expectJson(await this.fetchImpl(this.url(`/v1/games/${id}`),
                                          { method: 'DELETE' }));
  }
}
