/** Wire types for the /v1 game service (the server is the single source of truth). */

export type PlayerName = 'lata' | 'raj';

export interface MoveDoc {
  type: 'place' | 'pass_placement' | 'attack' | 'pass_attack';
  vertex?: number;
  count?: number;
}

export interface GraphDoc {
  vertices: number;
  edges: [number, number][];
}

export interface OutcomeDoc {
  territories: { lata: number; raj: number };
  troops: { lata: number; raj: number };
  result: 'LataWin' | 'RajWin' | 'Draw';
  strong_win: boolean;
}

export interface Snapshot {
  id: string;
  human: PlayerName;
  opponent: string;
  graph: GraphDoc;
  config: { attack_policy: string; placement_cap: number | null };
  phase: 'placement' | 'attack' | 'terminal';
  to_move: PlayerName;
  first_passer: PlayerName | null;
  owners: Record<string, PlayerName>;
  troops: Record<string, number>;
  budgets: { lata: number; raj: number };
  vulnerable: { lata: number[]; raj: number[] };
  legal_moves: MoveDoc[];
  move_log: MoveDoc[];
  outcome: OutcomeDoc | null;
}

export interface CreateGameRequest {
  family?: string;
  graph?: GraphDoc;
  troops?: number;
  budgets?: { lata: number; raj: number };
  config?: { attack_policy?: string; placement_cap?: number | null };
  human?: PlayerName;
  opponent?: string;
}
