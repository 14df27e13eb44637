import json

import pytest

from dend.catalog import MANIFEST, default_catalog, default_catalog_bytes, load_catalog
from dend.errors import (
    DimensionMismatch,
    DuplicateId,
    MissingAlgebra,
    PolySyntaxError,
    SchemaError,
    UnknownVariable,
)
from dend.operators import KIND_NAMES

DOC = json.loads(default_catalog_bytes())


def dump(doc):
    return json.dumps(doc).encode()


def edited(fn):
    doc = json.loads(default_catalog_bytes())
    fn(doc)
    return dump(doc)


def test_shipped_catalog_contents():
    cat = default_catalog()
    algebras, claims = cat
    assert [a.id for a in algebras] == list(MANIFEST)
    assert all(a.dim == 2 for a in algebras)
    assert "alpha" in cat.algebra("Dend2_2").table.names
    assert {c.kind.name for c in claims} == set(KIND_NAMES)
    assert len({c.id for c in claims}) == len(claims)
    assert cat.missing() == []
    cat.check_manifest()


def test_claims_are_affine_and_restrictions_nonzero():
    for claim in default_catalog().claims:
        assert claim.is_affine()
        assert all(r for r in claim.restrictions)
        assert claim.source
        for row in claim.matrix:
            for entry in row:
                assert set(entry.variables()) <= set(claim.table.names)


def test_multi_matrix_rows_become_separate_claims():
    cat = default_catalog()
    ids = [c.id for c in cat.claims_for("Dend2_2")]
    assert "rb0-Dend2_2-P1" in ids and "rb0-Dend2_2-P2" in ids
    p1, p2 = (next(c for c in cat.claims if c.id == i) for i in ("rb0-Dend2_2-P1", "rb0-Dend2_2-P2"))
    assert p1.source.rsplit(",", 1)[0] == p2.source.rsplit(",", 1)[0]


def test_sha256_tracks_bytes():
    a = load_catalog(default_catalog_bytes())
    b = load_catalog(default_catalog_bytes() + b"\n")
    assert a.sha256 != b.sha256
    assert len(a.sha256) == 64


def test_malformed_matrix_entry_is_a_syntax_error():
    def bad(doc):
        doc["claims"][0]["matrix"][0][1] = "a12 +"
    with pytest.raises(PolySyntaxError):
        load_catalog(edited(bad))


def test_unknown_variable_in_claim():
    def bad(doc):
        doc["claims"][0]["matrix"][0][0] = "zeta"
    with pytest.raises(UnknownVariable):
        load_catalog(edited(bad))


@pytest.mark.parametrize("mutate, exc", [
    (lambda d: d.pop("algebras"), SchemaError),
    (lambda d: d["algebras"][0].pop("dim"), SchemaError),
    (lambda d: d["algebras"][0].__setitem__("dim", "two"), SchemaError),
    (lambda d: d["claims"][0].__setitem__("kind", "baxter"), SchemaError),
    (lambda d: d["claims"][0].__setitem__("algebra", "Dend9_9"), SchemaError),
    (lambda d: d["claims"][0].pop("weight"), SchemaError),
    (lambda d: d["claims"][0]["matrix"].pop(), DimensionMismatch),
    (lambda d: d["algebras"][0]["prec"][0].__setitem__("coeffs", ["1"]), DimensionMismatch),
    (lambda d: d["algebras"].append(dict(d["algebras"][0])), DuplicateId),
    (lambda d: d["claims"].append(dict(d["claims"][0])), DuplicateId),
])
def test_schema_errors(mutate, exc):
    with pytest.raises(exc):
        load_catalog(edited(mutate))


def test_not_json():
    with pytest.raises(SchemaError):
        load_catalog(b"\xff\xfe")
    with pytest.raises(SchemaError):
        load_catalog(b"[]")


def test_missing_algebra_is_reported_by_manifest_check():
    def drop(doc):
        doc["algebras"] = [a for a in doc["algebras"] if a["id"] != "Dend2_7"]
        doc["claims"] = [c for c in doc["claims"] if c["algebra"] != "Dend2_7"]
    cat = load_catalog(edited(drop))
    assert len(cat.algebras) == 11
    assert cat.missing() == ["Dend2_7"]
    with pytest.raises(MissingAlgebra) as info:
        cat.check_manifest()
    assert info.value.ids == ["Dend2_7"]


def test_renamed_and_transposed_claims():
    claim = next(c for c in default_catalog().claims if c.id == "rb0-Dend2_1-P1")
    renamed = claim.renamed({"a12": "t"})
    assert renamed.params == ("t",)
    assert renamed.matrix_strings() == [["0", "t"], ["0", "0"]]
    assert claim.transposed().matrix_strings() == [["0", "0"], ["a12", "0"]]
