"""Command-line front end: FER sweeps, verification suites, single decodes.

The simulate command emits one CSV row per (decoder, channel point) in
the fixed v1 schema; every received word is derived from the master
seed and the (point, trial) index, so the statistics columns are
reproducible bit-for-bit regardless of decoder set or worker count.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .channel import AWGN, QSC, ChannelSpec, transmit
from .decoder import SoftConfig, SoftTrace, bm_decode, hard_list_decode, soft_decode
from .factor import PAIRWISE, RESULTANT
from .ma import PosteriorMatrix, asymptotic_condition, soft_premise
from .rscode import CodeParams, encode, pattern_between, rs_code
from .verify import SUITES

CSV_VERSION_LINE = "# ratdec-csv v1"
CSV_HEADER = "decoder,param,trials,frame_errors,fer,mean_list_size,mean_decode_us,seed"

DECODERS = ("bm", "soft", "hard")


@dataclass(frozen=True)
class RunConfig:
    m: int = 4
    k: int = 9
    prim_poly: int | None = None
    channel: str = QSC
    params: tuple[float, ...] = (0.05, 0.10, 0.15, 0.20)
    decoders: tuple[str, ...] = ("bm", "soft")
    trials: int = 1000
    seed: int = 1
    budget: int = 12
    method: str = PAIRWISE
    rho: int | None = None
    hard_radius: int | None = None
    hard_mult: int = 1

    def code(self) -> CodeParams:
        return rs_code(self.m, self.k, self.prim_poly)


def parse_config_file(path: str) -> dict:
    """key = value lines; '#' comments; lists are comma-separated."""
    out = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, val = (part.strip() for part in line.split("=", 1))
            out[key] = val
    return out


def build_run_config(file_values: dict, args) -> RunConfig:
    cfg = RunConfig()
    conv = {
        "m": int, "k": int, "prim_poly": lambda s: int(s, 0), "channel": str,
        "params": lambda s: tuple(float(x) for x in s.split(",")),
        "decoders": lambda s: tuple(x.strip() for x in s.split(",")),
        "trials": int, "seed": int, "budget": int, "method": str,
        "rho": int, "hard_radius": int, "hard_mult": int,
    }
    for key, val in file_values.items():
        if key not in conv:
            raise ValueError(f"unknown config key {key!r}")
        cfg = replace(cfg, **{key: conv[key](val)})
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed)
    if cfg.channel not in (QSC, AWGN):
        raise ValueError(f"unknown channel {cfg.channel!r}")
    for dec in cfg.decoders:
        if dec not in DECODERS:
            raise ValueError(f"unknown decoder {dec!r}")
    if cfg.method not in (PAIRWISE, RESULTANT):
        raise ValueError(f"unknown method {cfg.method!r}")
    if cfg.trials < 0:
        raise ValueError("trials must be >= 0")
    return cfg


def _decode_with(decoder: str, code: CodeParams, cfg: RunConfig, received):
    if decoder == "bm":
        return bm_decode(code, received.hard)
    if decoder == "soft":
        return soft_decode(code, received.pi, received.hard,
                           SoftConfig(budget=cfg.budget, method=cfg.method, rho=cfg.rho))
    radius = cfg.hard_radius if cfg.hard_radius is not None else code.t
    return hard_list_decode(code, received.hard, radius, cfg.hard_mult)


def _run_trials(cfg: RunConfig, point_index: int, trial_range) -> dict:
    """Per-decoder (frame_errors, list_size_sum, decode_time_sum) over trials."""
    code = cfg.code()
    spec = ChannelSpec(cfg.channel, cfg.params[point_index])
    stats = {dec: [0, 0, 0.0] for dec in cfg.decoders}
    for trial in trial_range:
        ss = np.random.SeedSequence(entropy=cfg.seed, spawn_key=(point_index, trial))
        rng = np.random.Generator(np.random.PCG64(ss))
        msg = [int(v) for v in rng.integers(0, code.field.q, size=code.k)]
        cw = encode(code, msg)
        received = transmit(code, spec, cw, rng)
        for dec in cfg.decoders:
            t0 = time.perf_counter()
            result = _decode_with(dec, code, cfg, received)
            elapsed = time.perf_counter() - t0
            st = stats[dec]
            st[0] += 0 if result.contains(cw) else 1
            st[1] += len(result.candidates)
            st[2] += elapsed
    return stats


def cmd_simulate(args) -> int:
    try:
        file_values = parse_config_file(args.config) if args.config else {}
        cfg = build_run_config(file_values, args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rows = []
    for point_index, param in enumerate(cfg.params):
        if cfg.trials == 0:
            continue
        if args.jobs > 1:
            chunks = np.array_split(np.arange(cfg.trials), args.jobs)
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                partials = list(pool.map(_trial_worker,
                                         [(cfg, point_index, chunk.tolist()) for chunk in chunks]))
            stats = {dec: [0, 0, 0.0] for dec in cfg.decoders}
            for part in partials:
                for dec, st in part.items():
                    stats[dec][0] += st[0]
                    stats[dec][1] += st[1]
                    stats[dec][2] += st[2]
        else:
            stats = _run_trials(cfg, point_index, range(cfg.trials))
        for dec in cfg.decoders:
            errors, list_sum, time_sum = stats[dec]
            rows.append((dec, param, cfg.trials, errors,
                         errors / cfg.trials,
                         list_sum / cfg.trials,
                         1e6 * time_sum / cfg.trials,
                         cfg.seed))
    _write_csv(args.out, rows)
    return 0


def _trial_worker(packed):
    cfg, point_index, trial_list = packed
    return _run_trials(cfg, point_index, trial_list)


def _write_csv(path: str, rows):
    with open(path, "w") as fh:
        fh.write(CSV_VERSION_LINE + "\n")
        fh.write(CSV_HEADER + "\n")
        for dec, param, trials, errors, fer, mls, us, seed in rows:
            fh.write(f"{dec},{param:.6g},{trials},{errors},{fer:.8g},"
                     f"{mls:.6g},{us:.1f},{seed}\n")


def cmd_verify(args) -> int:
    runner = SUITES[args.suite]
    report = runner()
    print(f"suite {report.name}: {report.passed} passed, {report.failed} failed")
    for detail in report.details:
        print(f"  FAIL: {detail}")
    return 0 if report.ok else 1


def _parse_word(code: CodeParams, text: str) -> list[int]:
    digits = (code.field.m + 3) // 4
    text = text.strip()
    if len(text) != code.n * digits:
        raise ValueError(f"word must be {code.n * digits} hex digits "
                         f"({digits} per symbol), got {len(text)}")
    out = []
    for i in range(code.n):
        chunk = text[i * digits:(i + 1) * digits]
        try:
            val = int(chunk, 16)
        except ValueError:
            raise ValueError(f"bad hex {chunk!r} at symbol {i + 1}") from None
        if val >= code.field.q:
            raise ValueError(f"symbol {i + 1} value {val} outside GF(2^{code.field.m})")
        out.append(val)
    return out


def _parse_pi_file(code: CodeParams, path: str) -> PosteriorMatrix:
    probs = np.zeros((code.n, code.n))
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    if len(lines) != code.n:
        raise ValueError(f"pi file must have {code.n} rows, got {len(lines)}")
    for i, line in enumerate(lines):
        vals = [float(tok) for tok in line.split()]
        if len(vals) != code.n:
            raise ValueError(f"pi row {i + 1} must have {code.n} entries")
        probs[i, :] = vals
    hard = 1.0 - probs.sum(axis=1)
    return PosteriorMatrix(code, probs, np.clip(hard, 0.0, 1.0))


def cmd_decode(args) -> int:
    try:
        m, n, k = (int(tok) for tok in args.code.split(","))
        code = rs_code(m, k)
        if code.n != n:
            raise ValueError(f"block length for m={m} is {code.n}, got {n}")
        word = _parse_word(code, args.word)
        pi = _parse_pi_file(code, args.pi) if args.pi else None
        truth = _parse_word(code, args.truth) if args.truth else None
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    results = [("bm", bm_decode(code, word))]
    trace = SoftTrace()
    if pi is not None:
        results.append(("soft", soft_decode(code, pi, word,
                                            SoftConfig(budget=args.budget), trace=trace)))
    for name, res in results:
        print(f"{name}: {res.status}")
        for cand in res.candidates:
            locs = ",".join(map(str, cand.locations)) or "-"
            vals = ",".join(map(str, cand.values)) or "-"
            print(f"  codeword={_format_word(code, cand.codeword)} I=[{locs}] "
                  f"e=[{vals}] score={cand.score:.4g} valid=yes")
    if truth is not None and pi is not None and trace.assignment is not None:
        pat = pattern_between(word, truth)
        asn = trace.assignment
        keys = trace.keys
        print("diagnostics (ground truth supplied):")
        print(f"  soft_premise: "
              f"{soft_premise(asn.m, asn.c, asn.d_y, keys, pat.locations, pat.values)}")
        print(f"  C={asn.c} D_Y={asn.d_y} L_a={keys.l_a} L_b={keys.l_b}")
        print(f"  asymptotic_condition: "
              f"{asymptotic_condition(pi, keys, pat.locations, pat.values)}")
    return 0


def _format_word(code: CodeParams, word) -> str:
    digits = (code.field.m + 3) // 4
    return "".join(f"{v:0{digits}x}" for v in word)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="ratdec",
                                     description="Reed-Solomon rational-interpolation decoding toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="run an FER sweep and write a CSV")
    p_sim.add_argument("--config", help="key = value config file")
    p_sim.add_argument("--jobs", type=int, default=1)
    p_sim.add_argument("--seed", type=int, default=None, help="override the master seed")
    p_sim.add_argument("--out", required=True)
    p_sim.set_defaults(func=cmd_simulate)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=sorted(SUITES))
    p_ver.set_defaults(func=cmd_verify)

    p_dec = sub.add_parser("decode", help="decode one received word")
    p_dec.add_argument("--code", required=True, metavar="m,n,k")
    p_dec.add_argument("--word", required=True, help="hex-encoded received word")
    p_dec.add_argument("--pi", help="posterior matrix file (enables the soft decoder)")
    p_dec.add_argument("--truth", help="hex-encoded transmitted word for diagnostics")
    p_dec.add_argument("--budget", type=int, default=12)
    p_dec.set_defaults(func=cmd_decode)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
