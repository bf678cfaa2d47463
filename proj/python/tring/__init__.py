"""Python front end for the tring library.

JSON documents cross the boundary as strings; this wrapper decodes them.
"""

import json

try:
    from . import _tring
except ImportError:  # in-tree build: the extension sits next to the package
    import _tring

TringError = _tring.TringError
__version__ = _tring.__version__


class TensorRing:
    def __init__(self, instance, cap=16, max_len=32):
        self._ring = _tring.TensorRing(instance, cap, max_len)

    @property
    def nil_index(self):
        return self._ring.nil_index

    @property
    def dim_t(self):
        return self._ring.dim_t

    @property
    def power_dims(self):
        return list(self._ring.power_dims)

    def structure(self):
        return json.loads(self._ring.algebra_json())

    def hypotheses(self, variant="gp", k=16):
        return json.loads(self._ring.hypotheses(variant, k))

    def verify(self, variant="gp", samples=100, seed=0, max_gen=3):
        """Returns (report, exit_code)."""
        text, code = self._ring.verify(variant, samples, seed, max_gen)
        return json.loads(text), code

    def lemmas(self, samples=100, seed=0, max_gen=3):
        text, code = self._ring.lemmas(samples, seed, max_gen)
        return json.loads(text), code

    def classify(self, obj, cls="gp", method="both"):
        return json.loads(self._ring.classify(json.dumps(obj), cls, method))

    def random_pair(self, seed=0, max_gen=3):
        return json.loads(self._ring.random_pair(seed, max_gen))

    def random_copair(self, seed=0, max_gen=3):
        return json.loads(self._ring.random_copair(seed, max_gen))


def example_qnak(field=2, n=3, h=2, i=1, j=3, reversed=False):
    return _tring.example_qnak(field, n, h, i, j, reversed)


def load_manifest(path):
    return _tring.load_manifest(str(path))


def load_instance(algebra, bimodule):
    return _tring.load_instance(str(algebra), str(bimodule))


__all__ = ["TensorRing", "TringError", "example_qnak", "load_instance", "load_manifest"]
