"""Command-line frontend.

Subcommands: ``solve``, ``verify``, ``reduce``, ``respond``, ``play`` and
``serve``.  Exit codes: 0 ok/holds/yes, 1 refuted/no, 2 usage or malformed
input, 3 resource limits.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from .codec import (
    CodecError,
    colored_graph_from_doc,
    dumps,
    graph_from_doc,
    loads,
    move_from_doc,
    move_to_doc,
    moves_from_doc,
    moves_to_doc,
    or_instance_from_doc,
    or_instance_to_doc,
    outcome_to_doc,
    player_from_name,
    tau_to_doc,
)
from .game import (
    AttackPolicy,
    GameState,
    IllegalMove,
    Phase,
    PlayerId,
    RuleConfig,
    apply_move,
    legal_moves,
    new_game,
    outcome,
    vulnerable_vertices,
)
from .graphs import Graph, GraphError, parse_family
from .response import decide_optimal_response
from .reduction import ReductionError, reduce_mcc
from .solver import LimitExceeded, SolveLimits, SymmetryGroup, hint_move, solve
from .strategies import Mode, OutOfApplicability, STRATEGY_IDS, get_strategy, next_move, relabel
from .verifier import report_to_doc, verify_guarantee

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_LIMITS = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def default_node_limit() -> Optional[int]:
    raw = os.environ.get("AGGRESSION_NODE_LIMIT")
    return int(raw) if raw else None


def _load_graph(args) -> Graph:
    if args.family and args.graph:
        raise CliError("choose either --family or --graph, not both")
    if args.family:
        try:
            return parse_family(args.family)
        except GraphError as exc:
            raise CliError(f"bad --family: {exc}") from exc
    if args.graph:
        try:
            with open(args.graph, "rb") as fh:
                return graph_from_doc(loads(fh.read()))
        except OSError as exc:
            raise CliError(f"cannot read {args.graph}: {exc}") from exc
        except CodecError as exc:
            raise CliError(str(exc)) from exc
    raise CliError("a board is required: --family name:size or --graph file.json")


def _budgets(args) -> tuple[int, int]:
    if args.troops is not None:
        if args.troops_lata is not None or args.troops_raj is not None:
            raise CliError("--troops conflicts with --troops-lata/--troops-raj")
        return (args.troops, args.troops)
    if args.troops_lata is None or args.troops_raj is None:
        raise CliError("budgets are required: --troops T or both --troops-lata/--troops-raj")
    return (args.troops_lata, args.troops_raj)


def _config(args) -> RuleConfig:
    policy = AttackPolicy(args.attack_policy)
    return RuleConfig(attack_policy=policy, placement_cap=args.placement_cap)


def _symmetry(args, graph: Graph) -> SymmetryGroup:
    choice = getattr(args, "symmetry", "auto")
    if choice != "auto":
        return SymmetryGroup(choice)
    if graph.is_matching():
        return SymmetryGroup.MATCHING_EDGES
    n = graph.vertex_count
    if n >= 3 and set(graph.edges) == {tuple(sorted((i, (i + 1) % n))) for i in range(n)}:
        return SymmetryGroup.CYCLE_DIHEDRAL
    return SymmetryGroup.IDENTITY


def _add_board_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help="board family, e.g. matching:3 or cycle:5")
    p.add_argument("--graph", help="board graph JSON file")
    p.add_argument("--troops", type=int, help="budget for both players")
    p.add_argument("--troops-lata", type=int, help="first player's budget")
    p.add_argument("--troops-raj", type=int, help="second player's budget")
    p.add_argument("--attack-policy", choices=["mandatory", "optional"],
                   default="mandatory")
    p.add_argument("--placement-cap", type=int, default=None,
                   help="max troops per placement (1 = Micro Aggression)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aggression",
                                     description="Aggression game toolkit")
    parser.add_argument("--seed", type=int, default=None,
                        help="reserved; all components are deterministic")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact value of a position")
    _add_board_flags(p)
    p.add_argument("--symmetry", choices=["auto", "identity", "matching_edges",
                                          "cycle_dihedral"], default="auto")
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--max-seconds", type=float, default=None)
    p.add_argument("--line", action="store_true", help="print the principal line")

    p = sub.add_parser("verify", help="check a strategy guarantee exhaustively")
    _add_board_flags(p)
    p.add_argument("--strategy", required=True, choices=list(STRATEGY_IDS))
    p.add_argument("--mode", choices=["repaired", "verbatim"], default="repaired")
    p.add_argument("--max-lines", type=int, default=None)
    p.add_argument("--max-seconds", type=float, default=None)

    p = sub.add_parser("reduce", help="Multi-Colored Clique -> Optimal Response")
    p.add_argument("--input", required=True, help="colored graph JSON file")
    p.add_argument("--output", required=True, help="instance JSON file to write")
    p.add_argument("--equalize-budgets", action="store_true")

    p = sub.add_parser("respond", help="decide an Optimal Response instance")
    p.add_argument("--instance", required=True, help="instance JSON file")
    p.add_argument("--max-nodes", type=int, default=None)

    p = sub.add_parser("play", help="play in the terminal")
    _add_board_flags(p)
    p.add_argument("--side", choices=["lata", "raj"], default="lata")
    p.add_argument("--opponent", default="solver",
                   help="strategy id, 'solver', or 'none'")
    p.add_argument("--replay", help="move-log JSON file to replay instead")

    p = sub.add_parser("serve", help="run the JSON/HTTP game service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--session-log", default=None,
                   help="append-only JSONL file for crash replay")
    return parser


def cmd_solve(args, out) -> int:
    graph = _load_graph(args)
    budgets = _budgets(args)
    state = new_game(graph, budgets[0], budgets[1], _config(args))
    limits = None
    max_nodes = args.max_nodes if args.max_nodes is not None else default_node_limit()
    if max_nodes is not None or args.max_seconds is not None:
        limits = SolveLimits(max_nodes=max_nodes, max_seconds=args.max_seconds)
    result = solve(state, _symmetry(args, graph), limits)
    value = result.value
    if value.as_tuple() > (0, 0):
        verdict = "LataWin"
    elif value.as_tuple() < (0, 0):
        verdict = "RajWin"
    else:
        verdict = "Draw"
    print(f"{verdict}  value=({value.territory_diff}, {value.troop_diff})  "
          f"best={result.best_move}  nodes={result.nodes_expanded}", file=out)
    if args.line:
        for i, move in enumerate(result.principal_line):
            print(f"  {i + 1}. {move}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    graph = _load_graph(args)
    budgets = _budgets(args)
    mode = Mode(args.mode)
    report = verify_guarantee(args.strategy, graph, budgets, mode=mode,
                              max_lines=args.max_lines, max_seconds=args.max_seconds)
    out.write(dumps(report_to_doc(report)).decode())
    return EXIT_OK if report.holds else EXIT_REFUTED


def cmd_reduce(args, out) -> int:
    try:
        with open(args.input, "rb") as fh:
            colored = colored_graph_from_doc(loads(fh.read()))
    except OSError as exc:
        raise CliError(f"cannot read {args.input}: {exc}") from exc
    except CodecError as exc:
        raise CliError(str(exc)) from exc
    try:
        output = reduce_mcc(colored, equalize_budgets=args.equalize_budgets)
    except ReductionError as exc:
        raise CliError(str(exc)) from exc
    doc = or_instance_to_doc(output.instance)
    doc["name_map"] = dict(sorted(output.name_map.items()))
    k, n, m = output.params
    doc["params"] = {"k": k, "n": n, "m": m}
    with open(args.output, "wb") as fh:
        fh.write(dumps(doc))
    t_l, t_r = output.budgets
    print(f"wrote {args.output}: {output.instance.graph.vertex_count} vertices, "
          f"T_L={t_l}, T_R={t_r}, |sigma|={len(output.instance.sigma)}", file=out)
    return EXIT_OK


def cmd_respond(args, out) -> int:
    try:
        with open(args.instance, "rb") as fh:
            instance = or_instance_from_doc(loads(fh.read()))
    except OSError as exc:
        raise CliError(f"cannot read {args.instance}: {exc}") from exc
    except CodecError as exc:
        raise CliError(str(exc)) from exc
    kwargs = {}
    if args.max_nodes is not None:
        kwargs["max_nodes"] = args.max_nodes
    answer = decide_optimal_response(instance, **kwargs)
    if answer.decision:
        print("yes", file=out)
        out.write(dumps({"tau": tau_to_doc(answer.witness_tau)}).decode())
        return EXIT_OK
    print("no", file=out)
    return EXIT_REFUTED


def _show_state(state: GameState, out) -> None:
    owner_marks = {None: ".", PlayerId.LATA: "L", PlayerId.RAJ: "R"}
    cells = [f"{v}:{owner_marks[state.owner[v]]}{state.troops[v] or ''}"
             for v in range(state.graph.vertex_count)]
    print("  board  " + "  ".join(cells), file=out)
    print(f"  phase={state.phase.value} to_move={state.to_move} "
          f"budgets={state.budget_remaining}", file=out)
    if state.phase is Phase.ATTACK:
        vl = sorted(vulnerable_vertices(state, PlayerId.LATA))
        vr = sorted(vulnerable_vertices(state, PlayerId.RAJ))
        print(f"  vulnerable: lata={vl} raj={vr}", file=out)


def cmd_play(args, out, inp) -> int:
    graph = _load_graph(args)
    budgets = _budgets(args)
    config = _config(args)

    if args.replay:
        try:
            with open(args.replay, "rb") as fh:
                moves = moves_from_doc(loads(fh.read()))
        except OSError as exc:
            raise CliError(f"cannot read {args.replay}: {exc}") from exc
        except CodecError as exc:
            raise CliError(str(exc)) from exc
        state = new_game(graph, budgets[0], budgets[1], config)
        for move in moves:
            state = apply_move(state, move)
        if state.phase is not Phase.TERMINAL:
            _show_state(state, out)
            print("replay ends before the game does", file=out)
            return EXIT_OK
        out.write(dumps(outcome_to_doc(outcome(state))).decode())
        return EXIT_OK

    human = player_from_name(args.side)
    opponent_kind = args.opponent
    strategy = None
    memory = None
    state = new_game(graph, budgets[0], budgets[1], config)
    if opponent_kind not in ("solver", "none"):
        strategy = get_strategy(opponent_kind)
        if strategy.player is human:
            raise CliError(f"{opponent_kind} plays {strategy.player}; pick the other side")
        state = new_game(graph, budgets[0], budgets[1], strategy.game_config())
        memory = strategy.initial_memory(state, mode=Mode.REPAIRED)
    symmetry = _symmetry(args, graph)
    node_limit = default_node_limit() or 200_000

    def opponent_move(s: GameState):
        nonlocal memory
        if opponent_kind == "solver":
            return hint_move(s, symmetry, node_budget=node_limit)
        move, memory = next_move(opponent_kind, s, memory)
        return move

    log = []
    print(f"You are {human}; opponent: {opponent_kind}.", file=out)
    print("Moves: 'place V C', 'attack V', 'pass', 'hint', or 'quit'.", file=out)
    while state.phase is not Phase.TERMINAL:
        if state.to_move is not human and opponent_kind != "none":
            move = opponent_move(state)
            print(f"  opponent plays {move}", file=out)
            state = apply_move(state, move)
            log.append(move)
            continue
        _show_state(state, out)
        line = inp.readline()
        if not line:
            print("input closed; aborting game", file=out)
            return EXIT_OK
        words = line.strip().split()
        if not words:
            continue
        try:
            if words[0] == "quit":
                return EXIT_OK
            if words[0] == "hint":
                print(f"  hint: {hint_move(state, symmetry, node_budget=node_limit)}",
                      file=out)
                continue
            move = _parse_move_words(words, state)
            if strategy is not None and state.to_move is human:
                memory = relabel(memory, move, state)
            state = apply_move(state, move)
            log.append(move)
        except (IllegalMove, CliError) as exc:
            print(f"  rejected: {exc}", file=out)
    out.write(dumps(outcome_to_doc(outcome(state))).decode())
    out.write(dumps({"move_log": moves_to_doc(log)}).decode())
    return EXIT_OK


def _parse_move_words(words: list[str], state: GameState):
    from .game import Move

    try:
        if words[0] == "place" and len(words) == 3:
            return Move.place(int(words[1]), int(words[2]))
        if words[0] == "attack" and len(words) == 2:
            return Move.attack(int(words[1]))
        if words[0] == "pass":
            if state.phase is Phase.PLACEMENT:
                return Move.pass_placement()
            return Move.pass_attack()
    except ValueError:
        pass
    raise CliError(f"cannot parse move {' '.join(words)!r}")


def cmd_serve(args, out) -> int:
    import uvicorn

    from .server import create_app

    app = create_app(session_log=args.session_log)
    print(f"serving on http://{args.host}:{args.port}", file=out)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def run_cli(argv: Optional[list[str]] = None, out=None, inp=None) -> int:
    out = out if out is not None else sys.stdout
    inp = inp if inp is not None else sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "solve":
            return cmd_solve(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "reduce":
            return cmd_reduce(args, out)
        if args.command == "respond":
            return cmd_respond(args, out)
        if args.command == "play":
            return cmd_play(args, out, inp)
        if args.command == "serve":
            return cmd_serve(args, out)
        parser.error(f"unknown command {args.command}")
        return EXIT_USAGE
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (CodecError, GraphError, ReductionError, OutOfApplicability,
            IllegalMove, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LimitExceeded as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMITS


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
