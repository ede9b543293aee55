from pathlib import Path

import pytest

from mementoscope.classify import PageKind, classify_tree
from mementoscope.datestrings import from_datestring14
from mementoscope.errors import RootFetchFailed
from mementoscope.fetcher import (
    FetchConfig,
    build_frame_tree,
    collect_resource_datetimes,
    extract_frames,
    extract_subresources,
    fetch_resource,
)
from mementoscope.fixtures import Exchange, FixtureTransport
from mementoscope.frametree import validate_tree

FIXTURES = Path(__file__).parent / "fixtures"

MITRE_URL = "https://web.archive.org/web/20100412125057/http://www.mitre.org/"


@pytest.fixture
def corpus():
    return FixtureTransport(FIXTURES / "corpus")


class TestFetchConfig:
    def test_defaults(self):
        cfg = FetchConfig()
        assert cfg.max_depth == 3
        assert cfg.max_frames == 64
        assert cfg.redirect_limit == 10
        assert cfg.per_request_timeout == 20.0
        assert cfg.concurrency_limit == 8
        assert cfg.fetch_subresources is False
        assert cfg.user_agent.startswith("mementoscope/")

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"max_depth": 0},
            {"max_frames": 0},
            {"redirect_limit": -1},
            {"per_request_timeout": 0},
            {"concurrency_limit": 0},
        ],
    )
    def test_limits_strictly_positive(self, kwargs):
        with pytest.raises(ValueError):
            FetchConfig(**kwargs)


class TestFetchResource:
    def test_memento_response(self, corpus):
        record = fetch_resource(corpus, MITRE_URL)
        assert record.ok
        assert record.status == 200
        assert record.final_url == MITRE_URL
        assert record.memento_header == "Mon, 12 Apr 2010 12:50:57 GMT"
        assert record.memento_datetime == from_datestring14("20100412125057")
        assert record.content_type == "text/html"

    def test_plain_response_has_no_datetime(self, corpus):
        record = fetch_resource(corpus, "https://example.com/")
        assert record.ok
        assert record.memento_datetime is None
        assert record.memento_header is None

    def test_redirect_chain_of_11_exceeds_limit(self):
        transport = FixtureTransport(FIXTURES / "redirects")
        record = fetch_resource(transport, "https://redirect.example.com/a0")
        assert record.error == "TOO_MANY_REDIRECTS"
        assert record.final_url is None
        assert record.status == 0

    def test_redirects_followed_to_final_headers(self):
        transport = FixtureTransport(FIXTURES / "redirects")
        record = fetch_resource(transport, "https://redirect.example.com/b0")
        assert record.ok
        assert record.redirects == 2
        assert record.final_url == "https://redirect.example.com/b2"
        assert record.memento_datetime == from_datestring14("20100412125057")

    def test_relative_location_resolved(self):
        transport = FixtureTransport(FIXTURES / "redirects")
        # b0 redirects to the relative path /b1.
        record = fetch_resource(transport, "https://redirect.example.com/b0")
        assert record.ok

    def test_timeout_recorded(self):
        transport = FixtureTransport(FIXTURES / "errors")
        record = fetch_resource(transport, "https://slow.example.com/")
        assert record.error == "TIMEOUT"
        assert record.final_url is None

    def test_network_error_recorded(self):
        transport = FixtureTransport(FIXTURES / "errors")
        record = fetch_resource(transport, "https://refused.example.com/")
        assert record.error == "NETWORK_ERROR"

    def test_unsupported_scheme_never_hits_transport(self):
        transport = FixtureTransport(exchanges=[])
        record = fetch_resource(transport, "ftp://example.com/file")
        assert record.error == "UNSUPPORTED_SCHEME"
        assert transport.requests == []

    def test_unparseable_memento_header_kept_raw(self):
        transport = FixtureTransport(
            exchanges=[
                Exchange(
                    url="https://odd.example/",
                    method=None,
                    status=200,
                    headers=(("Memento-Datetime", "three days ago"),),
                )
            ]
        )
        record = fetch_resource(transport, "https://odd.example/")
        assert record.memento_header == "three days ago"
        assert record.memento_datetime is None


class TestExtractFrames:
    def test_single_iframe(self):
        html = '<html><body><iframe src="https://a.example/x"></iframe></body></html>'
        assert extract_frames(html, "https://base.example/") == ["https://a.example/x"]

    def test_three_iframes_document_order(self):
        html = (
            '<iframe src="/one"></iframe>'
            '<frame src="two.html">'
            '<iframe src="https://other.example/three"></iframe>'
        )
        assert extract_frames(html, "https://base.example/dir/") == [
            "https://base.example/one",
            "https://base.example/dir/two.html",
            "https://other.example/three",
        ]

    def test_no_frames(self):
        assert extract_frames("<html><body>plain</body></html>", "https://b/") == []

    def test_base_href_honored(self):
        html = (
            '<head><base href="https://cdn.example/assets/"></head>'
            '<body><iframe src="frame.html"></iframe></body>'
        )
        assert extract_frames(html, "https://base.example/") == [
            "https://cdn.example/assets/frame.html"
        ]

    def test_self_reference_dropped(self):
        html = (
            '<iframe src="https://base.example/page"></iframe>'
            '<iframe src=""></iframe>'
            '<iframe src="https://a.example/other"></iframe>'
        )
        assert extract_frames(html, "https://base.example/page") == [
            "https://a.example/other"
        ]

    def test_duplicates_kept(self):
        html = '<iframe src="/f"></iframe><iframe src="/f"></iframe>'
        assert extract_frames(html, "https://b.example/") == [
            "https://b.example/f",
            "https://b.example/f",
        ]

    def test_malformed_html_never_fatal(self):
        html = '<iframe src="/ok"><div <<<> <iframe src="/also&bad >'
        got = extract_frames(html, "https://b.example/")
        assert "https://b.example/ok" in got

    def test_bytes_input(self):
        html = b'<iframe src="/f"></iframe>'
        assert extract_frames(html, "https://b.example/") == ["https://b.example/f"]


class TestBuildFrameTree:
    def test_single_node_memento(self):
        transport = FixtureTransport(FIXTURES / "trees" / "root_memento")
        tree = build_frame_tree(transport, MITRE_URL)
        assert tree.node_count() == 1
        assert tree.root.memento_datetime == from_datestring14("20100412125057")
        assert tree.root.children == []

    def test_oneiframe_tree_shape(self):
        transport = FixtureTransport(FIXTURES / "trees" / "oneiframe")
        tree = build_frame_tree(transport, "https://example.com/oneiframe.html")
        assert tree.node_count() == 2
        child = tree.root.children[0]
        assert child.depth == 1
        assert child.memento_datetime == from_datestring14("20190305093834")
        validate_tree(tree)

    def test_root_fetch_failure_is_fatal(self):
        transport = FixtureTransport(FIXTURES / "errors")
        with pytest.raises(RootFetchFailed) as err:
            build_frame_tree(transport, "https://slow.example.com/")
        assert err.value.cause == "TIMEOUT"
        assert err.value.code == "ROOT_FETCH_FAILED"

    def test_child_failures_annotate_nodes(self):
        exchanges = [
            Exchange(
                url="https://root.example/",
                method=None,
                status=200,
                headers=(("Content-Type", "text/html"),),
                body=b'<iframe src="https://child.example/gone"></iframe>',
            )
        ]
        transport = FixtureTransport(exchanges=exchanges)
        tree = build_frame_tree(transport, "https://root.example/")
        child = tree.root.children[0]
        assert child.fetch_error == "NETWORK_ERROR"
        assert child.status == 0
        assert child.children == []

    def test_cycle_terminates(self):
        transport = FixtureTransport(FIXTURES / "cycle")
        tree = build_frame_tree(transport, "https://cycle.example.com/a.html")
        assert tree.node_count() == 2
        assert [n.url for n in tree.walk()] == [
            "https://cycle.example.com/a.html",
            "https://cycle.example.com/b.html",
        ]
        validate_tree(tree)

    def test_max_depth_bounds_tree(self):
        transport = FixtureTransport(FIXTURES / "deep")
        tree = build_frame_tree(transport, "https://deep.example.com/f0.html")
        assert max(n.depth for n in tree.walk()) == 3
        assert tree.node_count() == 4

    def test_max_depth_override(self):
        transport = FixtureTransport(FIXTURES / "deep")
        cfg = FetchConfig(max_depth=1)
        tree = build_frame_tree(transport, "https://deep.example.com/f0.html", cfg)
        assert max(n.depth for n in tree.walk()) == 1
        assert tree.node_count() == 2

    def test_max_frames_budget(self):
        body = "".join(
            f'<iframe src="https://fan.example/c{i}"></iframe>' for i in range(10)
        ).encode()
        exchanges = [
            Exchange(
                url="https://fan.example/",
                method=None,
                status=200,
                headers=(("Content-Type", "text/html"),),
                body=body,
            )
        ] + [
            Exchange(
                url=f"https://fan.example/c{i}",
                method=None,
                status=200,
                headers=(("Content-Type", "text/html"),),
                body=b"leaf",
            )
            for i in range(10)
        ]
        transport = FixtureTransport(exchanges=exchanges)
        cfg = FetchConfig(max_frames=4)
        tree = build_frame_tree(transport, "https://fan.example/", cfg)
        assert tree.node_count() == 5  # root + max_frames
        assert [c.url for c in tree.root.children] == [
            f"https://fan.example/c{i}" for i in range(4)
        ]

    def test_non_html_children_are_leaves(self):
        exchanges = [
            Exchange(
                url="https://root.example/",
                method=None,
                status=200,
                headers=(("Content-Type", "text/html"),),
                body=b'<iframe src="https://example.com/report.pdf"></iframe>',
            ),
            Exchange(
                url="https://example.com/report.pdf",
                method=None,
                status=200,
                headers=(
                    ("Memento-Datetime", "Thu, 11 Jul 2019 16:05:00 GMT"),
                    ("Content-Type", "application/pdf"),
                ),
                body=b'%PDF <iframe src="https://never.example/"></iframe>',
            ),
        ]
        transport = FixtureTransport(exchanges=exchanges)
        tree = build_frame_tree(transport, "https://root.example/")
        child = tree.root.children[0]
        assert child.memento_datetime == from_datestring14("20190711160500")
        assert child.children == []  # PDF body is never parsed for frames

    def test_error_status_bodies_still_parsed(self):
        transport = FixtureTransport(FIXTURES / "errors")
        tree = build_frame_tree(transport, "https://example.com/410.html")
        assert tree.root.status == 410
        assert [c.url for c in tree.root.children] == [
            "https://example.com/tombstone.html"
        ]

    def test_deterministic_across_runs_and_concurrency(self):
        def snapshot(concurrency):
            transport = FixtureTransport(FIXTURES / "trees" / "mixed3")
            cfg = FetchConfig(concurrency_limit=concurrency)
            tree = build_frame_tree(transport, "https://example.com/compare.html", cfg)
            return [
                (n.url, n.depth, n.status, n.memento_header) for n in tree.walk()
            ]

        runs = [snapshot(c) for c in (1, 8, 8)]
        assert runs[0] == runs[1] == runs[2]
        assert len(runs[0]) == 4

    def test_classification_of_fixture_trees(self, archives):
        expectations = {
            "live": PageKind.LIVE,
            "root_memento": PageKind.ROOT_MEMENTO,
            "oneiframe": PageKind.MIXED_LIVE_ARCHIVAL,
            "promoted": PageKind.PROMOTED_IFRAME_MEMENTO,
            "zombie": PageKind.ZOMBIE_MEMENTO,
        }
        roots = {
            "live": "https://example.com/",
            "root_memento": MITRE_URL,
            "oneiframe": "https://example.com/oneiframe.html",
            "promoted": "https://trove.nla.gov.au/ndp/page/123",
            "zombie": "https://web.archive.org/web/20100412125057/http://www.mitre.org/careers.html",
        }
        for name, expected in expectations.items():
            transport = FixtureTransport(FIXTURES / "trees" / name)
            tree = build_frame_tree(transport, roots[name])
            got = classify_tree(tree, archives)
            assert got.kind is expected, name


class TestSubresources:
    def test_extract_subresources(self):
        html = (
            '<head><link rel="stylesheet" href="/site.css">'
            '<link rel="icon" href="/favicon.ico"></head>'
            '<body><img src="/logo.png"><script src="/app.js"></script>'
            '<img src="/logo.png"></body>'
        )
        assert extract_subresources(html, "https://b.example/") == [
            "https://b.example/site.css",
            "https://b.example/logo.png",
            "https://b.example/app.js",
        ]

    def test_two_of_five_archived(self):
        transport = FixtureTransport(FIXTURES / "subres")
        url = "https://web.archive.org/web/20210304030000/https://example.com/gallery.html"
        report = collect_resource_datetimes(transport, url)
        assert len(report.entries) == 2
        dated = dict(report.entries)
        assert dated[
            "https://web.archive.org/web/20210304025900cs_/https://example.com/site.css"
        ] == from_datestring14("20210304025900")
        assert dated[
            "https://web.archive.org/web/20210304025953im_/https://example.com/logo.png"
        ] == from_datestring14("20210304025953")
        assert report.failed == 1  # missing.js has no fixture
        assert report.checked == 4

    def test_head_then_get_fallback(self):
        transport = FixtureTransport(FIXTURES / "subres")
        url = "https://web.archive.org/web/20210304030000/https://example.com/gallery.html"
        collect_resource_datetimes(transport, url)
        css = "https://web.archive.org/web/20210304025900cs_/https://example.com/site.css"
        methods = [m for m, u in transport.requests if u == css]
        assert methods == ["HEAD", "GET"]

    def test_page_without_subresources(self):
        transport = FixtureTransport(FIXTURES / "trees" / "root_memento")
        report = collect_resource_datetimes(transport, MITRE_URL)
        assert report.entries == ()
        assert report.checked == 0
        assert report.failed == 0
