import random
from pathlib import Path

import pytest

from fuzzysumm.preprocess import build_document, parse_raw_document

from oracles import random_document_text

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


def make_doc(body, title="", doc_id="doc"):
    return build_document(parse_raw_document(doc_id, body, title=title))


def random_documents(n, seed=0, **kw):
    rng = random.Random(seed)
    docs = []
    for k in range(n):
        title, body = random_document_text(rng, **kw)
        docs.append(make_doc(body, title=title, doc_id=f"syn{k}"))
    return docs
