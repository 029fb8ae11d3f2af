"""Generating-function identities as truncated integer power series.

Three exact coefficient lists are compared degree by degree:

* the truncated product over poset elements of 1/(1 - q^dim(u));
* the brute-force count of reverse plane partitions by weight;
* the count of multiplicity vectors by total dimension, pushed through the
  bijection (which simultaneously re-checks injectivity and weight
  preservation).
"""

from dataclasses import dataclass, field

DFS_NODE_GUARD = 10**8


class GenfunError(ValueError):
    pass


def hook_product_series(poset, bound):
    """Coefficients of prod_u 1/(1 - q^dim(u)) up to q^bound."""
    coeffs = [0] * (bound + 1)
    coeffs[0] = 1
    for x in poset.elements:
        d = poset.annotations[x]["dim"]
        # multiply by the geometric series in q^d, in place
        for k in range(d, bound + 1):
            coeffs[k] += coeffs[k - d]
    return coeffs


def count_rpps_by_weight(poset, bound, node_guard=DFS_NODE_GUARD):
    """Number of reverse plane partitions of each weight 0..bound.

    Depth-first over elements from maxima downward; each value ranges from
    the max of the element's upper covers up to the remaining budget.
    """
    order = list(reversed(poset.linear_extension()))
    counts = [0] * (bound + 1)
    values = {}
    visited = 0

    def walk(idx, total):
        nonlocal visited
        visited += 1
        if visited > node_guard:
            raise GenfunError("enumeration guard exceeded")
        if idx == len(order):
            counts[total] += 1
            return
        x = order[idx]
        lo = max((values[y] for y in poset.upper_covers(x)), default=0)
        for v in range(lo, bound - total + 1):
            values[x] = v
            walk(idx + 1, total + v)
        values.pop(x, None)

    walk(0, 0)
    return counts


def rep_classes_by_weight(poset, bound):
    """All multiplicity vectors with total dimension <= bound, grouped by it."""
    dims = [(x, poset.annotations[x]["dim"]) for x in poset.elements]
    out = {d: [] for d in range(bound + 1)}

    def walk(idx, total, current):
        if idx == len(dims):
            out[total].append(dict(current))
            return
        x, d = dims[idx]
        walk(idx + 1, total, current)
        c = 1
        while total + c * d <= bound:
            current[x] = c
            walk(idx + 1, total + c * d, current)
            c += 1
        current.pop(x, None)

    walk(0, 0, {})
    return out


@dataclass
class GenfunReport:
    label: str
    bound: int
    product: list
    rpp_counts: list = None
    bijection_counts: list = None
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def __str__(self):
        verdict = "PASS" if self.passed else "FAIL"
        lines = [f"[{verdict}] generating function on {self.label} up to q^{self.bound}"]
        lines.append(f"  product    : {self.product}")
        if self.rpp_counts is not None:
            lines.append(f"  rpp count  : {self.rpp_counts}")
        if self.bijection_counts is not None:
            lines.append(f"  bijection  : {self.bijection_counts}")
        for f in self.failures:
            lines.append(f"  mismatch: {f}")
        return "\n".join(lines)


def verify_identity(ar, m, bound, *, enumerate_rpps=True, check_bijection=True):
    """Compare the product series against RPP counts and the bijection image.

    ``enumerate_rpps=False`` skips the direct count (used for E_7, where the
    product-vs-bijection route is the verified one).
    """
    from .bijection import poset_of, to_rpp

    poset = poset_of(ar, m)
    label = f"{ar.quiver.diagram},m={m}"
    report = GenfunReport(label, bound, hook_product_series(poset, bound))
    if enumerate_rpps:
        report.rpp_counts = count_rpps_by_weight(poset, bound)
        if report.rpp_counts != report.product:
            report.failures.append("product != rpp count")
    if check_bijection:
        by_weight = rep_classes_by_weight(poset, bound)
        counts = []
        for d in range(bound + 1):
            images = set()
            for rep in by_weight[d]:
                rpp = to_rpp(ar, m, rep)
                if rpp.weight() != d:
                    report.failures.append(f"weight not preserved at degree {d}")
                images.add(tuple(sorted(rpp.values.items())))
            if len(images) != len(by_weight[d]):
                report.failures.append(f"bijection not injective at degree {d}")
            counts.append(len(images))
        report.bijection_counts = counts
        if counts != report.product:
            report.failures.append("product != bijection image count")
    return report
