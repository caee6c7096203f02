"""Tamper-evident certificates: content digests plus semantic recheck.

A certificate is a plain JSON-ready dict.  ``seal`` attaches a sha256
digest of the canonical serialisation; ``verify_cert`` first checks the
digest, then replays the mathematical claim from scratch: search
witnesses get every required sum recoloured through the registry, and
construction certificates get their sums rebuilt and rechecked.  Stored
colours and counts are never trusted, only compared.
"""
from __future__ import annotations

import hashlib
import json
from itertools import combinations, combinations_with_replacement

from .digits import SumEscapedZ, build_H
from .exact import parse_rational
from .intervals import IntervalSet
from .qvec import parse_vec, vec_height, vec_sum
from .registry import UnknownColouring, resolve


class MalformedCert(ValueError):
    """The object is not a structurally valid certificate."""


def _fingerprint(body: dict) -> str:
    canon = json.dumps(body, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode("utf-8")).hexdigest()


def seal(cert: dict) -> dict:
    """Return a copy of the certificate with its content digest attached."""
    body = {key: value for key, value in cert.items() if key != "digest"}
    sealed = dict(body)
    sealed["digest"] = _fingerprint(body)
    return sealed


def _fail(msg: str):
    raise MalformedCert(msg)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _need(cert: dict, keys: set[str]):
    missing = keys - set(cert)
    if missing:
        _fail(f"missing certificate fields: {sorted(missing)}")
    extra = set(cert) - keys
    if extra:
        _fail(f"unexpected certificate fields: {sorted(extra)}")


def _digest_ok(cert: dict) -> bool:
    if not isinstance(cert.get("digest"), str):
        _fail("digest must be a string")
    body = {key: value for key, value in cert.items() if key != "digest"}
    try:
        return cert["digest"] == _fingerprint(body)
    except TypeError:
        _fail("certificate holds values with no canonical serialisation")


def _check_search(cert: dict):
    _need(cert, {"type", "colouring", "mode", "k", "ground", "max_size",
                 "witness", "colour", "exhaustive", "digest"})
    if not isinstance(cert["colouring"], str):
        _fail("colouring must be an id string")
    if cert["mode"] not in ("kX", "FSk"):
        _fail("mode must be kX or FSk")
    for key in ("k", "max_size"):
        if not _is_int(cert[key]) or cert[key] < 1:
            _fail(f"{key} must be a positive integer")
    ground = cert["ground"]
    if (not isinstance(ground, dict) or set(ground) != {"height", "dim"}
            or not all(_is_int(ground[key]) and ground[key] >= 1
                       for key in ("height", "dim"))):
        _fail("ground must record positive integer height and dim")
    if (not isinstance(cert["witness"], list) or not cert["witness"]
            or not all(isinstance(item, (list, tuple)) for item in cert["witness"])):
        _fail("witness must be a non-empty list of coordinate lists")
    if cert["colour"] is not None and not _is_int(cert["colour"]):
        _fail("colour must be an integer or null")
    if not isinstance(cert["exhaustive"], bool):
        _fail("exhaustive must be a boolean")


def _verify_search(cert: dict) -> bool:
    try:
        ref = resolve(cert["colouring"])
    except UnknownColouring:
        return False
    try:
        witness = [parse_vec(item) for item in cert["witness"]]
    except (ValueError, TypeError, ZeroDivisionError):
        _fail("witness coordinates must be reduced rational strings")
    dim, bound = cert["ground"]["dim"], cert["ground"]["height"]
    if ref.dim is not None and ref.dim != dim:
        return False
    if len(witness) != cert["max_size"] or len(set(witness)) != len(witness):
        return False
    if any(len(v) != dim or vec_height(v) > bound for v in witness):
        return False
    k = cert["k"]
    if cert["mode"] == "kX":
        combos = combinations_with_replacement(witness, k)
    else:
        combos = combinations(witness, k)
    colour = None
    for combo in combos:
        c = ref.fn(vec_sum(*combo))
        if colour is None:
            colour = c
        elif c != colour:
            return False
    return colour == cert["colour"]


def _check_cylinder(cert: dict):
    _need(cert, {"type", "method", "k", "m", "alpha_prefix", "n", "X", "Z",
                 "H", "checked_sums", "digest"})
    for key in ("k", "m", "n"):
        if not _is_int(cert[key]) or cert[key] < 1:
            _fail(f"{key} must be a positive integer")
    for key in ("alpha_prefix", "X", "Z", "H"):
        if not isinstance(cert[key], (list, tuple)):
            _fail(f"{key} must be a list")
    if not _is_int(cert["checked_sums"]) or cert["checked_sums"] < 0:
        _fail("checked_sums must be a non-negative integer")


def _verify_cylinder(cert: dict) -> bool:
    try:
        Z = IntervalSet.from_json(cert["Z"])
    except (ValueError, TypeError, ZeroDivisionError):
        _fail("Z must be a list of rational interval pairs")
    try:
        rebuilt = build_H(cert["alpha_prefix"], cert["n"], cert["X"],
                          cert["k"], Z)
    except (ValueError, TypeError, SumEscapedZ):
        return False
    body = {key: value for key, value in cert.items() if key != "digest"}
    body["alpha_prefix"] = list(body["alpha_prefix"])
    body["X"] = list(body["X"])
    return body == rebuilt


def _check_greedy(cert: dict):
    _need(cert, {"type", "method", "k", "T", "Z", "delta", "forbidden", "Y",
                 "checked_sums", "digest"})
    if not _is_int(cert["k"]) or cert["k"] < 1:
        _fail("k must be a positive integer")
    if not _is_int(cert["T"]) or cert["T"] < 0:
        _fail("T must be a non-negative integer")
    if not isinstance(cert["delta"], str):
        _fail("delta must be a rational string")
    for key in ("Z", "forbidden", "Y"):
        if not isinstance(cert[key], (list, tuple)):
            _fail(f"{key} must be a list")
    if not _is_int(cert["checked_sums"]) or cert["checked_sums"] < 0:
        _fail("checked_sums must be a non-negative integer")


def _verify_greedy(cert: dict) -> bool:
    try:
        Z = IntervalSet.from_json(cert["Z"])
        delta = parse_rational(cert["delta"])
        forb = {parse_rational(q) for q in cert["forbidden"]}
        Y = [parse_rational(q) for q in cert["Y"]]
    except (ValueError, TypeError, ZeroDivisionError):
        _fail("greedy certificate fields must hold reduced rational strings")
    k = cert["k"]
    if len(Y) != cert["T"] or len(set(Y)) != len(Y):
        return False
    origin = [(a, b) for a, b in Z if a <= 0 < b]
    if not origin or delta != max(b for _, b in origin) / k:
        return False
    if any(not 0 < y < delta for y in Y):
        return False
    count = 0
    for combo in combinations_with_replacement(Y, k):
        total = sum(combo)
        if not Z.contains(total) or total in forb:
            return False
        count += 1
    return count == cert["checked_sums"]


def verify_cert(cert: dict) -> bool:
    """Replay a certificate's claim; true iff everything checks out.

    The digest must match the canonical serialisation, and the claimed
    mathematics must reproduce: search certificates get all required
    sums recoloured, construction certificates get their element sets
    rebuilt or their sums rechecked against the target set.

    Raises:
        MalformedCert: if the object is not shaped like a certificate.
    """
    if not isinstance(cert, dict):
        _fail("a certificate must be a JSON object")
    if cert.get("type") == "search":
        _check_search(cert)
        return _digest_ok(cert) and _verify_search(cert)
    if cert.get("type") == "construction":
        if cert.get("method") == "cylinder":
            _check_cylinder(cert)
            return _digest_ok(cert) and _verify_cylinder(cert)
        if cert.get("method") == "greedy":
            _check_greedy(cert)
            return _digest_ok(cert) and _verify_greedy(cert)
        _fail(f"unknown construction method {cert.get('method')!r}")
    _fail(f"unknown certificate type {cert.get('type')!r}")
