import provar


def test_fold_figure():
    g = provar.fold(["baB", "bbA"], "ab")
    assert g.vertex_count == 3
    assert g.edge_count == 4
    assert g.rank == 2
    assert g.index is None


def test_membership():
    assert provar.member(["aa"], "aaaa", "a")
    assert not provar.member(["aa"], "aaa", "a")
    g = provar.fold(["baB", "bbA"], "ab")
    assert g.member("baBbbA")
    assert not g.member("a")


def test_lattice_ops():
    meet = provar.intersect(["aa"], ["aaa"], "a")
    assert meet.generators() == ["aaaaaa"]
    assert provar.join(["aa"], ["aaa"], "a") == provar.fold(["a"], "a")
    assert len(provar.fringe(["aa", "bb"], "ab")) == 5


def test_closures():
    r = provar.closure(["aaa"], "su", "a")
    assert r["generators"] == ["aaa"]
    assert r["status"] == "SOUND_UPPER"
    assert r["primes_used"][0] == 2
    assert not provar.dense(["aa"], "hp:3", "ab")
    assert provar.dense(["a", "b"], "nil", "ab")


def test_serialization():
    g = provar.fold(["ab"], "ab")
    assert "doublecircle" in g.to_dot()
    assert '"vertices"' in g.to_json()


def test_errors():
    try:
        provar.closure(["aa"], "gp:4", "a")
    except provar.ProvarError:
        pass
    else:
        raise AssertionError("expected ProvarError for a composite prime")
