import re
from pathlib import Path

import mfkit


PYPROJECT = Path(__file__).resolve().parent.parent / 'pyproject.toml'


def test_metadata_matches_the_manifest():
    text = PYPROJECT.read_text()
    assert re.search(r'^version = "{0}"$'.format(re.escape(mfkit.__version__)), text, re.M)
    assert 'authors = [{{name = "{0}"}}]'.format(mfkit.__author__) in text
    assert 'github.com' not in mfkit.__author__
