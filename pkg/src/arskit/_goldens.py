"""Frozen expected profiles of the finite fixtures.

Generated once by ``arskit.testkit.oracle.oracle_profile`` and reviewed by hand.
Each entry maps an element name (``None`` for the global profile) to the
properties that hold there; every other property is expected to fail.
"""

GOLDEN_PROFILES = {
    'CE-1': {
        'a': {'NF', 'WN', 'SN', 'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPred', 'UNred', 'MP', 'CP'},
        'b': {'WN', 'WM', 'WCR', 'NPconv', 'UNconv'},
        'c': {'WN', 'WM', 'WCR', 'NPconv', 'UNconv'},
        'd': {'NF', 'WN', 'SN', 'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPred', 'UNred', 'MP', 'CP'},
        None: {'WN', 'WM', 'WCR', 'BP', 'FB', 'Dec'},
    },
    'CE-2': {
        'a': {'NF', 'WN', 'SN', 'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'b': {'WN', 'WM', 'WCR', 'NPconv', 'UNconv', 'UNred'},
        'c': {'WN', 'WM', 'WCR', 'NPconv', 'UNconv', 'UNred'},
        'd': {'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        None: {'WM', 'WCR', 'UNconv', 'UNred', 'BP', 'FB', 'Dec'},
    },
    'CE-3': {
        'a': {'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'b': {'WM', 'WCR', 'NPconv', 'NPred', 'UNconv', 'UNred'},
        'c': {'WM', 'WCR', 'NPconv', 'NPred', 'UNconv', 'UNred'},
        'd': {'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        None: {'WM', 'WCR', 'NPconv', 'NPred', 'UNconv', 'UNred', 'BP', 'FB', 'Dec'},
    },
    'CE-4': {
        'a': {'WN', 'WM', 'SM', 'SMseq', 'WCR', 'SubCommutative', 'NPconv', 'UNconv', 'UNred'},
        'b': {'WN', 'WM', 'SM', 'SMseq', 'NPconv', 'UNconv', 'UNred'},
        'c': {'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'd': {'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'e': {'NF', 'WN', 'SN', 'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        None: {'WM', 'SM', 'SMseq', 'UNconv', 'UNred', 'BP', 'RP', 'RPminus', 'FB', 'Dec'},
    },
    'CE-5': {
        'a': {'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'b': {'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'c': {'WN', 'WM', 'SM', 'SMseq', 'UNconv', 'UNred'},
        'd': {'WN', 'WM', 'SM', 'SMseq', 'UNconv', 'UNred'},
        'm': {'NF', 'WN', 'SN', 'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPred', 'UNred', 'MP', 'CP'},
        'n': {'NF', 'WN', 'SN', 'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPred', 'UNred', 'MP', 'CP'},
        None: {'WM', 'SM', 'SMseq', 'UNred', 'BP', 'RP', 'RPminus', 'FB', 'Dec'},
    },
    'CE-8': {
        'a': {'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'b': {'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        None: {'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP', 'BP', 'RP', 'RPminus', 'FB', 'Dec'},
    },
    'CE-11': {
        'a': {'WN', 'WM', 'WCR', 'CR', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'b': {'WN', 'WM', 'WCR', 'CR', 'SubCommutative', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'c': {'NF', 'WN', 'SN', 'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        None: {'WN', 'WM', 'WCR', 'CR', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP', 'BP', 'FB', 'Dec'},
    },
    'terese-trs': {
        'a': {'NF', 'WN', 'SN', 'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'b': {'NF', 'WN', 'SN', 'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'p(a)': {'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'p(b)': {'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'k': {'NF', 'WN', 'SN', 'MF', 'WM', 'SM', 'SMseq', 'WCR', 'CR', 'SubCommutative', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'f(p(a),p(a))': {'WN', 'WM', 'WCR', 'CR', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'f(p(a),p(b))': {'WN', 'WM', 'WCR', 'CR', 'SubCommutative', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'f(p(b),p(a))': {'WN', 'WM', 'WCR', 'CR', 'SubCommutative', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        'f(p(b),p(b))': {'WN', 'WM', 'WCR', 'CR', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP'},
        None: {'WM', 'WCR', 'CR', 'NPconv', 'NPred', 'UNconv', 'UNred', 'MP', 'CP', 'BP', 'FB', 'Dec'},
    },
}
