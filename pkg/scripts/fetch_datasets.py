#!/usr/bin/env python3
"""Download and normalize the co-tag benchmark dataset.

The integration test in ``tests/test_acceptance.py`` and the dataset
demo read a three-file simplex layout::

    <data-dir>/tags-math-sx/nverts.txt      one hyperedge size per line
    <data-dir>/tags-math-sx/simplices.txt   concatenated 1-based node ids
    <data-dir>/tags-math-sx/labels.txt      name of node k+1 on line k

This script produces that layout from the public "tags-math-sx"
archive (math.stackexchange.com question tags; one hyperedge per
question).  The core library never touches the network; run this once,
or pass ``--archive`` with a zip you downloaded yourself from

    https://www.cs.cornell.edu/~arb/data/tags-math-sx/

Any other dataset published in the same nverts/simplices/node-labels
format can be fetched with ``--name`` and ``--url``.
"""

import argparse
import io
import pathlib
import sys
import urllib.error
import urllib.request
import zipfile

CANDIDATE_URLS = (
    "https://www.cs.cornell.edu/~arb/data/tags-math-sx/tags-math-sx.zip",
    "https://www.cs.cornell.edu/~arb/data/downloads/tags-math-sx.zip",
)

# archive member suffix -> normalized file name
MEMBERS = {
    "-nverts.txt": "nverts.txt",
    "-simplices.txt": "simplices.txt",
    "-node-labels.txt": "labels.txt",
}


def _download(urls):
    last = None
    for url in urls:
        print(f"fetching {url} ...")
        try:
            with urllib.request.urlopen(url, timeout=120) as response:
                return response.read()
        except (urllib.error.URLError, OSError) as exc:
            print(f"  failed: {exc}")
            last = exc
    raise SystemExit(
        f"could not download the archive ({last}); download it manually from "
        "the dataset page and rerun with --archive <file.zip>"
    )


def _strip_label_ids(text):
    """Drop a leading 'k ' id column when line k carries it."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    out = []
    for k, line in enumerate(lines, start=1):
        head, _, tail = line.strip().partition(" ")
        if tail and head.isdigit() and int(head) == k:
            out.append(tail.strip())
        else:
            out.append(line.strip())
    return "\n".join(out) + "\n"


def _extract(blob, out_dir):
    out_dir.mkdir(parents=True, exist_ok=True)
    written = {}
    with zipfile.ZipFile(io.BytesIO(blob)) as archive:
        for member in archive.namelist():
            for suffix, target in MEMBERS.items():
                if member.endswith(suffix):
                    text = archive.read(member).decode("utf-8")
                    if target == "labels.txt":
                        text = _strip_label_ids(text)
                    (out_dir / target).write_text(text, encoding="utf-8")
                    written[target] = member
    missing = sorted(set(MEMBERS.values()) - set(written))
    if missing:
        raise SystemExit(f"archive lacks expected members for: {', '.join(missing)}")
    return written


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--data-dir", default="data", help="output root (default: data)")
    parser.add_argument("--name", default="tags-math-sx", help="dataset directory name")
    parser.add_argument("--url", action="append", default=None,
                        help="archive url (repeatable; overrides the defaults)")
    parser.add_argument("--archive", help="use an already-downloaded zip instead")
    args = parser.parse_args(argv)

    if args.archive:
        blob = pathlib.Path(args.archive).read_bytes()
    else:
        blob = _download(args.url or CANDIDATE_URLS)

    out_dir = pathlib.Path(args.data_dir) / args.name
    written = _extract(blob, out_dir)
    for target, member in sorted(written.items()):
        print(f"wrote {out_dir / target}  (from {member})")

    sizes = (out_dir / "nverts.txt").read_text().split()
    labels = (out_dir / "labels.txt").read_text().splitlines()
    print(f"{args.name}: {len(labels)} labeled nodes, {len(sizes)} hyperedges")
    return 0


if __name__ == "__main__":
    sys.exit(main())
