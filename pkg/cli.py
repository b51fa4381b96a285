import argparse
import contextlib
import logging
import sys

import oracles
import proofify
import proofnet
import rbgraph
import samples
import satreduce

logger = logging.getLogger(__name__)

ERRORS = (
    rbgraph.GraphError,
    proofnet.ProofNetError,
    proofify.ProofifyError,
    satreduce.ReductionError,
    oracles.OracleError,
    OSError,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="rbcheck", description="Alternatif devre ve pomset ispat ağı araçları")
    parser.add_argument("-v", "--verbose", action="store_true", help="INFO düzeyinde günlük")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(sub, name, help_text, graph_output=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="Girdi dosyası ('-' standart girdi)")
        p.add_argument("--budget", type=int, default=None, help="Arama genişletme sınırı")
        if graph_output:
            p.add_argument("--dot", metavar="FILE", help="Çizgeyi DOT olarak yaz")
        return p

    command(commands, "check", "İspat yapısının doğruluğunu denetle")
    command(commands, "find-circuit", "Alternatif devre ara")
    p = command(commands, "proofify", "Çizgeyi ispat yapısına çevir")
    p.add_argument("--drop-isolated", action="store_true", help="İzole eşleşme çiftlerini çıkar")
    p.add_argument("--shape", choices=proofify.BUNDLE_SHAPES, default="left")
    p.add_argument("--map", action="store_true", help="Köken tablosunu yorum olarak ekle")
    p = command(commands, "to-rb", "İspat yapısının RB çizgesi")
    p.add_argument("--web", action="store_true", help="İlişki ağı okumasını kullan")
    p.add_argument("--map", action="store_true", help="Köken tablosunu yorum olarak ekle")
    p = command(commands, "dot", "Çizgeyi DOT biçiminde yaz", graph_output=False)
    p.add_argument("--witness", action="store_true", help="Bulunan devreyi vurgula")

    sat = commands.add_parser("sat", help="CNF-SAT indirgemesi").add_subparsers(
        dest="sat_command", required=True
    )
    command(sat, "encode", "DIMACS girdisini eşleşmeli çizgeye kodla")
    p = command(sat, "solve", "Alternatif devre aramasıyla çöz")
    p.add_argument("--verify-oracle", action="store_true", help="Kaba kuvvetle karşılaştır")

    sample = commands.add_parser("sample", help="Tohumlu rastgele örnek üret")
    sample.add_argument("kind", choices=("graph", "cnf"))
    sample.add_argument("--seed", type=int, default=0)
    sample.add_argument("--size", type=int, default=3, help="Eşleşme çifti ya da değişken sayısı")
    return parser


def _read(path, stdin):
    if path == "-":
        return stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _write_dot(args, graph, witness=None):
    if getattr(args, "dot", None):
        with open(args.dot, "w", encoding="utf-8") as f:
            f.write(rbgraph.to_dot(graph, witness))
        logger.info("DOT yazıldı: %s", args.dot)


def _check(args, text, out):
    ps = proofnet.parse_structure(text)
    verdict = proofnet.check_correctness(ps, budget=args.budget)
    if args.dot:
        _write_dot(args, proofnet.to_rb(ps)[0], verdict.witness)
    out.write(f"{verdict}\n")
    return 0 if verdict.correct else 1


def _find_circuit(args, text, out):
    g = rbgraph.parse_graph(text)
    witness = rbgraph.find_alternating_circuit(g, budget=args.budget)
    _write_dot(args, g, witness)
    if witness is None:
        out.write("NONE\n")
        return 1
    out.write(f"CIRCUIT {witness}\n")
    return 0


def _proofify(args, text, out):
    g = rbgraph.parse_graph(text)
    if args.drop_isolated:
        g = proofify.drop_isolated(g)
    result = proofify.proofify(g, shape=args.shape)
    if args.dot:
        _write_dot(args, proofnet.to_rb(result.structure)[0])
    out.write(proofnet.format_structure(result.structure))
    if args.map:
        out.writelines(f"# map {line}\n" for line in result.map.lines())
    return 0


def _to_rb(args, text, out):
    ps = proofnet.parse_structure(text)
    graph, rmap = (proofnet.to_web_rb if args.web else proofnet.to_rb)(ps)
    _write_dot(args, graph)
    out.write(rbgraph.format_graph(graph))
    if args.map:
        out.writelines(f"# map {line}\n" for line in rmap.lines())
    return 0


def _dot(args, text, out):
    g = rbgraph.parse_graph(text)
    witness = rbgraph.find_alternating_circuit(g, budget=args.budget) if args.witness else None
    out.write(rbgraph.to_dot(g, witness))
    return 0


def _sat_encode(args, text, out):
    inst = satreduce.parse_dimacs(text)
    enc = satreduce.encode(inst)
    if enc.shortcut is not None:
        out.write(f"# normalized: shortcut {enc.shortcut}\n")
        sg = satreduce.degenerate_encoding(enc.shortcut == "SAT")
    else:
        for clause in enc.normalized.added:
            out.write(f"# normalized: added {' '.join(str(lit) for lit in clause)} 0\n")
        sg = enc.superimposed
    _write_dot(args, sg.graph)
    out.write(rbgraph.format_graph(sg.graph))
    return 0


def _sat_solve(args, text, out):
    inst = satreduce.parse_dimacs(text)
    result = satreduce.solve(inst, budget=args.budget)
    if result.encoding.superimposed is not None:
        _write_dot(args, result.encoding.superimposed.graph, result.witness)
    out.write(f"{result}\n")
    if args.verify_oracle:
        try:
            expected = oracles.brute_force_sat(inst) is not None
        except oracles.TooLarge:
            out.write("# oracle: skipped\n")
        else:
            if expected != result.satisfiable:
                out.write("# oracle: DISAGREES\n")
                return 2
            out.write("# oracle: agrees\n")
    return 0 if result.satisfiable else 1


def _sample(args, out):
    if args.kind == "graph":
        out.write(rbgraph.format_graph(samples.random_matched_digraph(args.seed, pairs=args.size)))
    else:
        inst = samples.random_cnf(args.seed, variables=args.size, clauses=2 * args.size)
        out.write(satreduce.format_dimacs(inst))
    return 0


HANDLERS = {
    "check": _check,
    "find-circuit": _find_circuit,
    "proofify": _proofify,
    "to-rb": _to_rb,
    "dot": _dot,
    "encode": _sat_encode,
    "solve": _sat_solve,
}


def run(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        with contextlib.redirect_stdout(stdout):
            args = build_parser().parse_args(argv)
    except UsageError as e:
        stderr.write(f"Hata: {e}\n")
        return 2
    except SystemExit as e:
        # --help yardımı yazdıktan sonra çıkar
        return e.code or 0

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING, stream=stderr, force=True
    )
    try:
        if args.command == "sample":
            return _sample(args, stdout)
        name = args.sat_command if args.command == "sat" else args.command
        return HANDLERS[name](args, _read(args.input, stdin), stdout)
    except ERRORS as e:
        stderr.write(f"Hata: {e}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
