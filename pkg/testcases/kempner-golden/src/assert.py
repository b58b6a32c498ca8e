import filecmp
import json
import math

print("Checking kempner golden output...")

assert filecmp.cmp("census.csv", "expected_census.csv", shallow=False), (
    "census.csv differs from expected_census.csv"
)
assert filecmp.cmp("census.csv", "census-again.csv", shallow=False), (
    "repeated census run is not byte-identical"
)
print("Census matches the golden file")

with open("sigma_c.json", "r", encoding="utf-8") as f:
    sigma_c = json.load(f)
assert abs(sigma_c["sigma_c"] - math.log(9) / math.log(10)) < 1e-12
assert sigma_c["diverges_at_sigma_c"] is True
assert abs(sigma_c["critical_ratio"] - 1.0) < 1e-12
print(f"sigma_c = {sigma_c['sigma_c']!r}")

with open("certificate.json", "r", encoding="utf-8") as f:
    certificate = json.load(f)
expected = 8 * 1000 / 9
assert certificate["certified_sum_lower"] <= expected
assert abs(certificate["certified_sum_lower"] - expected) < 1e-9 * expected
assert certificate["dominates"] is True
print(f"certified lower bound = {certificate['certified_sum_lower']!r}")

with open("sum.json", "r", encoding="utf-8") as f:
    enclosure = json.load(f)
assert enclosure["verdict"] == "ConvergentEnclosed"
assert enclosure["lower_bound"] <= enclosure["partial_sum"] <= enclosure["upper_bound"]
print(f"F_A(2) in [{enclosure['counted_lower_bound']!r}, {enclosure['upper_bound']!r}]")
