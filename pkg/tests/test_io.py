import pytest

from minsep.families import melon
from minsep.io import GraphFormatError, format_graph, parse_graph, read_graph, write_graph


def test_parse_with_comments_and_labels():
    text = "# a path\nn 3\n0 1\n\n1 2\nlabel 0 a\nlabel 2 far end\n"
    G = parse_graph(text)
    assert G.edges() == [(0, 1), (1, 2)]
    assert G.labels == ("a", "1", "far end")


def test_format_is_exact():
    G = melon(1)
    text = format_graph(G)
    assert text.startswith("n 5\n0 2\n")
    assert text.endswith("label 4 v_3_1\n")
    assert "\r" not in text


@pytest.mark.parametrize(
    "text",
    [
        "0 1\n",
        "n 3\n0 1\n0 1\n",
        "n 3\n1 0\n",
        "n 3\n0 3\n",
        "n 3\n1 1\n",
        "n 3\nlabel 0 a\n0 1\n",
        "n x\n",
        "",
    ],
)
def test_rejects_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_file_round_trip(tmp_path):
    G = melon(3)
    path = tmp_path / "m3.txt"
    write_graph(G, path, comment="melon k=3")
    assert read_graph(path) == G
    assert path.read_bytes().count(b"\n") == 1 + 1 + G.m + G.n
