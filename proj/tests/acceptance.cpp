// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every comparison is exact rational or exact coefficient equality.

#include "mzv/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

namespace {

int failures = 0;

void run(int number, const std::string& label, const std::function<mzv::CheckList()>& suite) {
  auto start = std::chrono::steady_clock::now();
  mzv::CheckList checks = suite();
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = mzv::all_ok(checks);
  std::printf("[%s] criterion %d: %s (%zu checks, %.2fs)\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              checks.size(), seconds);
  if (!ok) {
    for (const auto& c : checks)
      if (!c.ok) std::printf("       failed: %s -- %s\n", c.name.c_str(), c.detail.c_str());
    ++failures;
  }
}

}  // namespace

int main() {
  run(1, "generating-function equivalence, depth 1..3 at degree 8",
      [] { return mzv::verify_equivalence(3, 8); });
  run(2, "Birkhoff, coproduct-average and closed-form pipelines agree, depth <= 3, sum <= 6",
      [] { return mzv::verify_pipeline_agreement(3, 6); });
  run(3, "known values: (-1/2)^n, depth-1 Bernoulli formula, even vanishing",
      [] { return mzv::verify_known_values(6, 20, 8); });
  run(4, "reduced-coproduct closed formula vs subset enumeration; one-block primitives",
      [] { return mzv::verify_coproduct_oracle(4, 2, 6); });
  run(5, "character multiplicativity up to weight 4 and the depth-2 product identity",
      [] { return mzv::verify_shuffle_homomorphism(4); });
  run(6, "depth-lowering recurrences (sum <= 6) and the operator-chain identity (degree 4)", [] {
    mzv::CheckList six = mzv::verify_recurrence_identities(3, 6);
    mzv::CheckList chain = mzv::verify_genfn_chain(2, 2, 4);
    six.insert(six.end(), chain.begin(), chain.end());
    return six;
  });
  run(7, "depth <= 3 conversions round-trip against the closed forms, sum <= 6",
      [] { return mzv::verify_conversions(6); });
  run(8, "character annihilates the relation-ideal generators up to weight 3",
      [] { return mzv::verify_ideal_annihilation(3); });
  if (failures == 0) std::printf("acceptance: all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
