from __future__ import annotations

import pytest

from nearrings import (
    ValidationError,
    document_from_nearring,
    make_field,
    nearring_from_document,
    nearring_from_nearfield,
    read_document,
    write_document,
    zp2_family,
)


def test_roundtrip_with_provenance(c9_example):
    doc = document_from_nearring(c9_example)
    text = write_document(doc)
    assert read_document(text) == doc
    assert write_document(read_document(text)) == text
    rebuilt = nearring_from_document(doc)
    assert rebuilt.mul.tobytes() == c9_example.mul.tobytes()
    assert rebuilt.meta is not None


def test_roundtrip_without_provenance(c9_example):
    from nearrings import PlanarNearring

    bare = PlanarNearring(c9_example.add, c9_example.mul, name="bare")
    doc = document_from_nearring(bare)
    assert not doc.has_provenance
    assert read_document(write_document(doc)) == doc


def test_roundtrip_all_named_examples(order15_example, planar_ring9):
    for nr in (order15_example, planar_ring9,
               nearring_from_nearfield(make_field(8)), zp2_family(5)):
        doc = document_from_nearring(nr)
        text = write_document(doc)
        assert read_document(text) == doc
        rebuilt = nearring_from_document(read_document(text))
        assert rebuilt.mul.tobytes() == nr.mul.tobytes()
        assert rebuilt.add.tobytes() == nr.add.tobytes()


def test_tampered_document_rejected(c9_example):
    doc = document_from_nearring(c9_example)
    # poison the stored table so provenance no longer reproduces it
    rows = [list(r) for r in doc.mul]
    rows[1][1] = (rows[1][1] + 1) % doc.order
    bad = type(doc)(doc.order, doc.name, doc.add,
                    tuple(tuple(r) for r in rows), doc.phi, doc.reps, doc.zero)
    with pytest.raises(ValidationError):
        nearring_from_document(bad)


def test_malformed_text_rejected():
    with pytest.raises(ValidationError):
        read_document("not a document\n")
    with pytest.raises(ValidationError):
        read_document("planar-nearring 99\nname x\norder 1\nadd\n0\nmul\n0\nend\n")
    good = ("planar-nearring 1\nname t\norder 2\nadd\n0 1\n1 0\nmul\n0 0\n0 0\nend\n")
    doc = read_document(good)
    assert doc.order == 2 and not doc.has_provenance


def test_generator_closure_accepted(c9_example):
    # a document may carry only generators; the group is closed on read
    doc = document_from_nearring(c9_example)
    neg = doc.phi[1]
    slim = type(doc)(doc.order, doc.name, doc.add, doc.mul, (neg,), doc.reps, doc.zero)
    rebuilt = nearring_from_document(slim)
    assert rebuilt.meta[0].phi.order == 2
    assert rebuilt.mul.tobytes() == c9_example.mul.tobytes()
