import json

import pytest

import rota_baxter as rb


def test_corpus_and_group():
    assert "S3" in rb.corpus_names()
    s3 = rb.corpus_group("S3")
    assert s3.order == 6
    assert not s3.is_abelian()
    back = rb.Group.from_json(s3.to_json())
    assert back.table() == s3.table()
    with pytest.raises(rb.RbgError):
        rb.corpus_group("nope")


def test_verify_and_enumerate():
    s3 = rb.corpus_group("S3")
    assert rb.verify(s3, [0] * 6) == (True, None)
    valid, witness = rb.verify(s3, [0, 1, 2, 3, 4, 5])
    assert not valid and witness is not None
    ops = rb.enumerate(s3)
    assert ops == rb.enumerate(s3, "brute")
    assert [0] * 6 in ops
    assert all(rb.tilde(s3, op) in ops for op in ops)
    z4 = rb.corpus_group("Z4")
    c = rb.census(z4, classify=True)
    assert c["count"] == 4 and len(c["classes"]) == 2


def test_extension_and_derived():
    s3 = rb.corpus_group("S3")
    assert rb.extend(s3, [1, 2], [1, 0])["status"] == "no_extension"
    ext = rb.extend(s3, [1, 2], [1, 2])
    assert ext["status"] == "extends"
    d = rb.derived(s3, ext["extension"]["images"])
    assert d["structure"]["all_hold"]


def test_constructions_and_lie_ring():
    s3 = rb.corpus_group("S3")
    assert rb.power_map(s3, 2) is None
    assert rb.power_map(s3, 0) == [0] * 6
    d4 = rb.corpus_group("D4")
    op = rb.central_conjugation(d4, 1)
    l = rb.lie_ring(d4, op)
    assert len(l["layers"]) == 2
    assert l["induced"]["valid"]


def test_cli():
    code, out, err = rb.cli("verify", "-g", "corpus:S3", "-b", "b-1")
    assert code == 0 and json.loads(out) == {"valid": True}
    code, out, err = rb.cli("verify", "-g", "missing.json", "-b", "b0")
    assert code == 2 and err
