"""Command-line front end: build, verify, profile, probe, reproduce72.

Build configs are JSON.  Every construction kind shares ``seed`` (fills any
omitted tables/permutations deterministically) and writes the same code-set
JSON schema: {"q", "L", "K", "M", "meta", "codes": [[[exponent or null]]]}.

    {"kind": "theorem1",  "q": 2, "m": 2, "h": [...], "hp": [...], "g": [...], "pi": [...]}
    {"kind": "corollary1","q": 3, "m": 3, "n": 1, "J": [2], ...}
    {"kind": "theorem2",  "blocks": [{"p":2,"m":2},{"p":3,"m":2}], "lam": 4, ...}
    {"kind": "corollary3","blocks": [...], "n": [1,0], "J": [[1],[]],
     "pi": [[0,2],[3,4]], "chains": [[[f,fp]],...], "g": [...] ,
     "couplings": [{"lam":0,"f":[...],"h":[...]}], "offsets": {"0":2,"1":3}}
    {"kind": "kronecker", "inputs": ["a.json", "b.json"]}

Tables are length-q integer lists; per-restriction values may be given as
{"<restriction index>": value}.  A ``corrupt`` stanza ({"block": 0, "chain": 0,
"which": "f", "table": [...]}) flags the spec for the necessity probe.

Exit codes: 0 success (verify: is a CCC; probe: violation found),
1 verification/probe failure, 2 usage or config errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys

from . import example72
from .construct import (
    CodeSet,
    ConstructionSpec,
    build_code_set,
    corollary1_spec,
    corollary3_spec,
    corrupt_spec,
    kronecker_compose,
    theorem1_spec,
    theorem2_spec,
)
from .exact_corr import correlation_profile
from .mixed_radix import DomainSpec
from .qary import SpecError
from .verify import necessity_probe, verify_ccc


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# randomized filling of unconstrained slots


def _rand_table(rng: random.Random, q: int) -> tuple:
    return tuple(rng.randrange(q) for _ in range(q))


def _rand_perm_table(rng: random.Random, q: int, p: int) -> tuple:
    """Random length-q table that permutes {0..p-1} mod p."""
    sigma = rng.sample(range(p), p)
    return tuple(sigma[u % p] + p * rng.randrange(q // p) for u in range(q))


def _get_tables(cfg, key, count, q, fill):
    raw = cfg.get(key)
    if raw is None:
        return [fill() for _ in range(count)]
    if len(raw) != count:
        raise ConfigError(f"{key} must list {count} tables")
    return [tuple(int(v) for v in t) for t in raw]


def _int_key_dict(raw: dict) -> dict:
    return {int(k): v for k, v in raw.items()}


def _maybe_per_restriction(raw, convert):
    if isinstance(raw, dict):
        return {int(k): convert(v) for k, v in raw.items()}
    return convert(raw)


def spec_from_config(cfg: dict, seed: int | None = None) -> ConstructionSpec:
    """Turn a build config into a construction spec, filling gaps from the seed."""
    kind = cfg.get("kind")
    rng = random.Random(cfg.get("seed", 0) if seed is None else seed)
    if kind == "theorem1":
        q, m = int(cfg["q"]), int(cfg["m"])
        pi = tuple(cfg.get("pi") or rng.sample(range(m), m))
        h = _get_tables(cfg, "h", m - 1, q, lambda: _rand_perm_table(rng, q, q))
        hp = _get_tables(cfg, "hp", m - 1, q, lambda: _rand_perm_table(rng, q, q))
        g = _get_tables(cfg, "g", m, q, lambda: _rand_table(rng, q))
        spec = theorem1_spec(q, m, h, hp, g, pi)
    elif kind == "corollary1":
        q, m, n = int(cfg["q"]), int(cfg["m"]), int(cfg["n"])
        J = tuple(cfg.get("J") or range(m - n, m))
        free = sorted(set(range(m)) - set(J))
        raw_pi = cfg.get("pi")
        pi = _maybe_per_restriction(raw_pi, tuple) if raw_pi else tuple(free)
        h = _get_tables(cfg, "h", m - n - 1, q, lambda: _rand_perm_table(rng, q, q))
        hp = _get_tables(cfg, "hp", m - n - 1, q, lambda: _rand_perm_table(rng, q, q))
        g_raw = cfg.get("g")
        if g_raw is None:
            g = tuple(_rand_table(rng, q) for _ in range(m - n))
        else:
            g = _maybe_per_restriction(g_raw, lambda ts: tuple(tuple(int(v) for v in t) for t in ts))
        offsets = cfg.get("offsets", "auto")
        if isinstance(offsets, dict):
            offsets = _int_key_dict(offsets)
        spec = corollary1_spec(q, m, n, J, pi, h, hp, g, offsets)
    elif kind in ("theorem2", "corollary3"):
        domain = DomainSpec.from_json(cfg["blocks"])
        q = domain.q
        if kind == "theorem2":
            if domain.k != 2:
                raise ConfigError("theorem2 needs exactly two blocks")
            (p1, m1), (p2, m2) = domain.blocks
            pi = tuple(cfg.get("pi") or rng.sample(range(m1), m1))
            pip = tuple(cfg.get("pip") or (m1 + i for i in rng.sample(range(m2), m2)))
            f = _get_tables(cfg, "f", m1 - 1, q, lambda: _rand_perm_table(rng, q, p1))
            fp = _get_tables(cfg, "fp", m1 - 1, q, lambda: _rand_perm_table(rng, q, p1))
            h = _get_tables(cfg, "h", m2 - 1, q, lambda: _rand_perm_table(rng, q, p2))
            hp = _get_tables(cfg, "hp", m2 - 1, q, lambda: _rand_perm_table(rng, q, p2))
            g = _get_tables(cfg, "g", m1, q, lambda: _rand_table(rng, q))
            gp = _get_tables(cfg, "gp", m2, q, lambda: _rand_table(rng, q))
            f0 = tuple(cfg.get("f0") or _rand_table(rng, q))
            h0 = tuple(cfg.get("h0") or _rand_table(rng, q))
            lam = int(cfg.get("lam", rng.randrange(q)))
            spec = theorem2_spec(p1, p2, m1, m2, pi, pip, f, fp, h, hp, g, gp, f0, h0, lam)
        else:
            n = [int(v) for v in cfg.get("n", [0] * domain.k)]
            J_cfg = cfg.get("J")
            J = []
            for i, ni in enumerate(n):
                if J_cfg is not None:
                    J.append(tuple(int(j) for j in J_cfg[i]))
                else:
                    positions = domain.block_positions(i)
                    J.append(tuple(positions[len(positions) - ni :]))
            pi_cfg = cfg.get("pi")
            pis = []
            for i in range(domain.k):
                free = [j for j in domain.block_positions(i) if j not in J[i]]
                if pi_cfg is None:
                    pis.append(tuple(free))
                else:
                    pis.append(_maybe_per_restriction(pi_cfg[i], tuple))
            p_i = [b[0] for b in domain.blocks]
            chains_cfg = cfg.get("chains")
            chains = []
            for i in range(domain.k):
                want = domain.blocks[i][1] - n[i] - 1
                if chains_cfg is None:
                    chains.append(
                        tuple(
                            (_rand_perm_table(rng, q, p_i[i]), _rand_perm_table(rng, q, p_i[i]))
                            for _ in range(want)
                        )
                    )
                else:
                    chains.append(
                        tuple((tuple(int(v) for v in f), tuple(int(v) for v in fp)) for f, fp in chains_cfg[i])
                    )
            g_cfg = cfg.get("g")
            gs = []
            for i in range(domain.k):
                want = domain.blocks[i][1] - n[i]
                if g_cfg is None:
                    gs.append(tuple(_rand_table(rng, q) for _ in range(want)))
                else:
                    gs.append(
                        _maybe_per_restriction(
                            g_cfg[i], lambda ts: tuple(tuple(int(v) for v in t) for t in ts)
                        )
                    )
            coup_cfg = cfg.get("couplings")
            couplings = []
            for i in range(domain.k - 1):
                if coup_cfg is None:
                    couplings.append((rng.randrange(q), _rand_table(rng, q), _rand_table(rng, q)))
                else:
                    c = coup_cfg[i]
                    couplings.append(
                        (int(c.get("lam", 0)), tuple(c["f"]), tuple(c["h"]))
                    )
            offsets = cfg.get("offsets")
            if offsets is not None:
                offsets = _int_key_dict(offsets)
            spec = corollary3_spec(domain, J, pis, chains, gs, couplings, offsets)
    else:
        raise ConfigError(f"unknown construction kind {kind!r}")

    corrupt = cfg.get("corrupt")
    if corrupt:
        table = corrupt.get("table")
        if table is None and "constant" in corrupt:
            table = [int(corrupt["constant"])] * spec.func.domain.q
        spec = corrupt_spec(
            spec,
            int(corrupt.get("block", 0)),
            int(corrupt.get("chain", 0)),
            corrupt.get("which", "f"),
            table,
        )
    return spec


def build_from_config(cfg: dict, seed: int | None = None) -> CodeSet:
    if cfg.get("kind") == "kronecker":
        inputs = cfg.get("inputs") or []
        if len(inputs) < 2:
            raise ConfigError("kronecker needs at least two input code-set files")
        sets = [load_code_set(path) for path in inputs]
        out = sets[0]
        skip = bool(cfg.get("skip_verify", False))
        for nxt in sets[1:]:
            out = kronecker_compose(out, nxt, skip_verify=skip)
        return out
    return build_code_set(spec_from_config(cfg, seed))


def load_code_set(path: str) -> CodeSet:
    with open(path) as fh:
        return CodeSet.from_json(json.load(fh))


# ---------------------------------------------------------------------------
# subcommands


def cmd_build(args) -> int:
    with open(args.config) as fh:
        cfg = json.load(fh)
    codes = build_from_config(cfg, args.seed)
    payload = codes.dumps()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
        print(f"wrote ({codes.K},{codes.L}) code set over Z_{codes.q} to {args.out}")
    else:
        sys.stdout.write(payload)
    return 0


def cmd_verify(args) -> int:
    codes = load_code_set(args.codeset)
    report = verify_ccc(codes, mode=args.mode, max_violations=args.max_violations)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        print(report.summary())
        for v in report.violations:
            val = v.element.to_complex()
            print(
                f"  violation k1={v.k1} k2={v.k2} tau={v.tau} counts={v.element.counts} "
                f"value={val.real:+.6g}{val.imag:+.6g}j"
            )
    return 0 if report.is_ccc else 1


def cmd_profile(args) -> int:
    codes = load_code_set(args.codeset)
    if not (0 <= args.k1 < codes.K and 0 <= args.k2 < codes.K):
        raise ConfigError(f"code indices must lie in [0, {codes.K})")
    prof = correlation_profile(codes.code(args.k1), codes.code(args.k2))
    values = prof.complex_values()
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["tau"] + [f"count_{j}" for j in range(prof.q)] + ["re", "im", "magnitude"]
        )
        for row, tau in enumerate(prof.taus):
            val = values[row]
            writer.writerow(
                [tau]
                + [int(c) for c in prof.counts[row]]
                + [f"{val.real:.12g}", f"{val.imag:.12g}", f"{abs(val):.12g}"]
            )
    print(f"wrote {2 * prof.L - 1} profile rows to {args.out}")
    return 0


def cmd_probe(args) -> int:
    with open(args.config) as fh:
        cfg = json.load(fh)
    if not cfg.get("corrupt"):
        raise ConfigError("probe needs a config with a 'corrupt' stanza")
    spec = spec_from_config(cfg, args.seed)
    result = necessity_probe(spec)
    print(result.summary())
    return 0 if result.found else 1


def cmd_reproduce72(args) -> int:
    checks = example72.reproduce()
    ok = True
    for name, passed, detail in checks:
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
    print("reproduce72:", "all checks passed" if ok else "MISMATCH")
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="ccckit",
        description="Build and exactly verify complete complementary code sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a code set from a JSON config")
    p.add_argument("config")
    p.add_argument("--out", help="output path (stdout if omitted)")
    p.add_argument("--seed", type=int, default=None, help="override the config seed")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="verify the complementarity of a code-set file")
    p.add_argument("codeset")
    p.add_argument("--mode", choices=["exact", "float"], default="exact")
    p.add_argument("--max-violations", type=int, default=16)
    p.add_argument("--json", action="store_true", help="emit the full report as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("profile", help="dump the full correlation profile of a code pair")
    p.add_argument("codeset")
    p.add_argument("k1", type=int)
    p.add_argument("k2", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("probe", help="hunt the violation of a corrupted construction")
    p.add_argument("config")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("reproduce72", help="re-derive the bundled (12,72) example")
    p.set_defaults(func=cmd_reproduce72)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        ConfigError,
        SpecError,
        json.JSONDecodeError,
        OSError,
        KeyError,
        TypeError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
