#pragma once

// Surgery descriptions on framed links and the first homology of the
// manifolds they describe, plus the M_n family built from the chain
// link C(n, n, -1, n, n) with one extra drilled component.

#include "dehn/integer.hpp"
#include "dehn/integer_matrix.hpp"
#include "dehn/slope.hpp"
#include "dehn/two_bridge.hpp"

#include <algorithm>
#include <cstddef>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace dehn {

/// A link in S^3 recorded only through its pairwise linking numbers.
/// Framings are not part of the link; they live in a FillingSpec.
class FramedLink {
 public:
  FramedLink(IntegerMatrix linking, std::vector<std::string> labels = {})
      : lk_(std::move(linking)), labels_(std::move(labels)) {
    const std::size_t m = lk_.rows();
    if (m == 0) throw DomainError("framed link needs at least one component");
    if (!lk_.is_square()) throw DomainError("linking matrix must be square");
    for (std::size_t i = 0; i < m; ++i) {
      if (lk_(i, i) != 0) throw DomainError("linking matrix diagonal must be zero");
      for (std::size_t j = i + 1; j < m; ++j)
        if (lk_(i, j) != lk_(j, i)) throw DomainError("linking matrix must be symmetric");
    }
    if (!labels_.empty()) {
      if (labels_.size() != m) throw DomainError("need one label per component");
      std::set<std::string> seen(labels_.begin(), labels_.end());
      if (seen.size() != m) throw DomainError("component labels must be unique");
    }
  }

  std::size_t size() const { return lk_.rows(); }
  const IntegerMatrix& linking() const { return lk_; }
  const Integer& linking(std::size_t i, std::size_t j) const { return lk_(i, j); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::string label(std::size_t i) const { return labels_.empty() ? std::to_string(i) : labels_[i]; }

  /// Resolves a label, or a decimal index when no label matches.
  std::size_t index_of(std::string_view name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == name) return i;
    if (!name.empty() && std::all_of(name.begin(), name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      std::size_t i = std::stoul(std::string(name));
      if (i < size()) return i;
    }
    throw DomainError("no component named '" + std::string(name) + "'");
  }

 private:
  IntegerMatrix lk_;
  std::vector<std::string> labels_;
};

/// Component index -> filling slope. Absent components stay as boundary tori.
using FillingSpec = std::map<std::size_t, Slope>;

/// Relation of filling component i along p/q: p * m_i + q * lambda_i = 0
/// with lambda_i = sum_{j != i} lk(i, j) m_j.
inline std::vector<Integer> filling_relation(const FramedLink& link, std::size_t i, const Slope& s) {
  if (i >= link.size()) throw DomainError("component index " + std::to_string(i) + " out of range");
  std::vector<Integer> row(link.size());
  for (std::size_t j = 0; j < link.size(); ++j) {
    row[j] = (j == i) ? s.p() : Integer(s.q() * link.linking(i, j));
  }
  return row;
}

/// One row per filled component (ascending index) over the meridian
/// generators of all components.
inline IntegerMatrix build_presentation(const FramedLink& link, const FillingSpec& fill) {
  IntegerMatrix m(0, link.size());
  for (const auto& [i, s] : fill) m.append_row(filling_relation(link, i, s));
  return m;
}

/// build_presentation for `fill`, followed by rows for `extra` in order.
/// A component may not be filled twice.
inline IntegerMatrix fill_remaining(const FramedLink& link, const FillingSpec& fill,
                                    const FillingSpec& extra) {
  IntegerMatrix m = build_presentation(link, fill);
  for (const auto& [i, s] : extra) {
    if (fill.contains(i)) throw DomainError("component " + link.label(i) + " is already filled");
    m.append_row(filling_relation(link, i, s));
  }
  return m;
}

struct SurgeryDescription {
  FramedLink link;
  FillingSpec fill;
};

/// Index of the drilled component x in mn_framed_link.
inline constexpr std::size_t kFamilyDrilled = 5;

/// Components (a, b, c, d, e, x): the chain a-b-c-d-e carrying surgery
/// coefficients (n, -n, -1, -n, n), and x unfilled, linking a, c, e.
inline SurgeryDescription mn_framed_link(const Integer& n) {
  require_family_index(n);
  IntegerMatrix lk(6, 6);
  auto set = [&lk](std::size_t i, std::size_t j, int v) {
    lk(i, j) = v;
    lk(j, i) = v;
  };
  enum : std::size_t { a, b, c, d, e, x };
  set(a, b, -1);
  set(a, x, 1);
  set(b, c, 1);
  set(c, d, -1);
  set(c, x, -1);
  set(d, e, 1);
  set(e, x, 1);
  FramedLink link(std::move(lk), {"a", "b", "c", "d", "e", "x"});
  FillingSpec fill{{a, Slope::integral(n)},  {b, Slope::integral(-n)}, {c, Slope::integral(-1)},
                   {d, Slope::integral(-n)}, {e, Slope::integral(n)}};
  return {std::move(link), std::move(fill)};
}

/// |(n - 1)(n^2 + 1)|, the torsion order of H_1(M_n).
inline Integer family_torsion(const Integer& n) { return abs((n - 1) * (n * n + 1)); }

enum class Chirality { chiral, achiral };
enum class NullHomology { certified_non_null_homologous, inconclusive_by_homology };

inline std::string to_string(Chirality c) { return c == Chirality::chiral ? "chiral" : "achiral"; }

inline std::string to_string(NullHomology v) {
  return v == NullHomology::certified_non_null_homologous ? "CERTIFIED-NON-NULL-HOMOLOGOUS"
                                                          : "INCONCLUSIVE-BY-HOMOLOGY";
}

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FamilyReport {
  Integer n;
  SchubertForm schubert;
  int components = 0;
  Slope fraction;                 // continued fraction of C(n, n, -1, n, n)
  AbelianGroup homology;          // H_1(M_n)
  Integer torsion;                // t(n), read off the SNF
  AbelianGroup trivial_filling;   // x -> 1/0
  AbelianGroup zero_filling;      // x -> 0/1
  Integer lens_order;             // p(n)
  Chirality chirality = Chirality::chiral;
  NullHomology null_homology = NullHomology::inconclusive_by_homology;
  Integer slope_distance_mu_lambda;  // d(1/0, 0/1)
  Slope swap_image_of_mu;            // h(1/0) for h = swap
  std::vector<Slope> swap_fixed;     // fixed by swap, |p|, |q| <= kReportSlopeBound
  std::vector<Check> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  std::optional<Check> first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return c;
    return std::nullopt;
  }
};

inline constexpr int kReportSlopeBound = 10;

/// Computes every mechanically checkable ingredient for one member of the
/// family and records each comparison as a named check.
inline FamilyReport certify_family(const Integer& n) {
  require_family_index(n);
  auto [link, fill] = mn_framed_link(n);

  FamilyReport r{.n = n,
                 .schubert = family_schubert(n),
                 .components = 0,
                 .fraction = continued_fraction_eval(family_word(n)),
                 .homology = {},
                 .torsion = 0,
                 .trivial_filling = {},
                 .zero_filling = {},
                 .lens_order = 0,
                 .chirality = Chirality::chiral,
                 .null_homology = NullHomology::inconclusive_by_homology,
                 .slope_distance_mu_lambda = 0,
                 .swap_image_of_mu = apply_involution(SlopeInvolution::swap(), Slope::meridian()),
                 .swap_fixed = {},
                 .checks = {}};
  auto check = [&r](std::string name, bool ok, std::string detail = {}) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const Integer p = family_p(n);
  const Integer q = family_q(n);
  r.components = component_count(r.schubert);
  r.lens_order = p;

  check("cfrac-identity", r.fraction == Slope::normalize(q, p),
        "C(n,n,-1,n,n) = " + r.fraction.str() + ", q/p = " + q.str() + "/" + p.str());
  check("lens-order-factorization", p == (n - 1) * (n - 1) * (n * n + 1));
  check("parity", (r.components == 1) == (n % 2 == 0));

  const IntegerMatrix presentation = build_presentation(link, fill);
  r.homology = cokernel(presentation);
  r.torsion = r.homology.torsion_order();
  const Integer expected_t = family_torsion(n);
  check("lemma-homology", r.homology == AbelianGroup(1, {expected_t}),
        "H_1(M_n) = " + r.homology.str() + ", expected Z + Z/" + expected_t.str());

  const IntegerMatrix trivial =
      fill_remaining(link, fill, {{kFamilyDrilled, Slope::meridian()}});
  const IntegerMatrix zero =
      fill_remaining(link, fill, {{kFamilyDrilled, Slope::longitude()}});
  r.trivial_filling = cokernel(trivial);
  r.zero_filling = cokernel(zero);
  auto cyclic_of_order = [&p](const AbelianGroup& g) {
    return g.is_finite() && g.is_cyclic() && g.torsion_order() == p;
  };
  check("lens-order-trivial-filling", cyclic_of_order(r.trivial_filling),
        "x -> 1/0 gives " + r.trivial_filling.str());
  check("lens-order-zero-filling", cyclic_of_order(r.zero_filling),
        "x -> 0/1 gives " + r.zero_filling.str());
  check("lens-orders-equal", r.trivial_filling.order() == r.zero_filling.order());

  check("oracle-agreement",
        minors_gcd_oracle(presentation) == r.homology &&
            minors_gcd_oracle(trivial) == r.trivial_filling &&
            minors_gcd_oracle(zero) == r.zero_filling);

  r.chirality = is_achiral_lens(r.schubert) ? Chirality::achiral : Chirality::chiral;
  const bool congruence = mod(q * q - 1, p) == 0 && (p <= 2 || mod(q * q + 1, p) != 0);
  check("chirality-congruence", congruence && r.chirality == Chirality::chiral,
        "q^2 = 1 and q^2 != -1 mod p");
  check("achirality-brute-force",
        is_achiral_lens(r.schubert) == schubert_equivalent(r.schubert, mirror(r.schubert)));

  r.null_homology = r.torsion != p ? NullHomology::certified_non_null_homologous
                                   : NullHomology::inconclusive_by_homology;
  check("lens-order-over-torsion", p == abs(n - 1) * r.torsion);
  check("null-homology-coverage", (r.torsion == p) == (abs(n - 1) == 1));

  r.slope_distance_mu_lambda = slope_distance(Slope::meridian(), Slope::longitude());
  r.swap_fixed = fixed_slopes(SlopeInvolution::swap(), kReportSlopeBound);
  check("slope-obstruction",
        r.slope_distance_mu_lambda == 1 && r.swap_image_of_mu == Slope::longitude() &&
            r.swap_fixed == std::vector<Slope>{Slope::normalize(-1, 1), Slope::normalize(1, 1)},
        "d(1/0,0/1) = 1, h(1/0) = 0/1, h fixes only +-1/1");
  return r;
}

struct FamilySweep {
  std::vector<FamilyReport> reports;  // ascending n, skipping 0 and 1
  std::vector<Check> checks;          // range-level checks

  bool all_passed() const { return !first_failure().has_value(); }

  /// First failing check, scanning reports in order of n, then range checks.
  std::optional<Check> first_failure() const {
    for (const auto& r : reports)
      if (auto f = r.first_failure()) {
        f->name = "n=" + r.n.str() + ": " + f->name;
        return f;
      }
    for (const auto& c : checks)
      if (!c.passed) return c;
    return std::nullopt;
  }
};

/// certify_family over [n_min, n_max] \ {0, 1}, one task per n, plus the
/// pairwise distinctness of t(n) across the range.
inline FamilySweep certify_family_range(const Integer& n_min, const Integer& n_max) {
  if (n_min > n_max) throw InputError("empty range [" + n_min.str() + ", " + n_max.str() + "]");
  std::vector<Integer> members;
  for (Integer n = n_min; n <= n_max; ++n)
    if (n != 0 && n != 1) members.push_back(n);

  FamilySweep sweep;
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < members.size(); start += width) {
    std::vector<std::future<FamilyReport>> batch;
    for (std::size_t i = start; i < std::min(members.size(), start + width); ++i) {
      batch.push_back(std::async(std::launch::async, [&n = members[i]] { return certify_family(n); }));
    }
    for (auto& t : batch) sweep.reports.push_back(t.get());
  }

  std::map<Integer, Integer> seen;
  std::string collision;
  for (const auto& r : sweep.reports) {
    auto [it, inserted] = seen.emplace(r.torsion, r.n);
    if (!inserted && collision.empty()) {
      collision = "t(" + it->second.str() + ") = t(" + r.n.str() + ") = " + r.torsion.str();
    }
  }
  sweep.checks.push_back({"torsion-distinct", collision.empty(), collision});
  return sweep;
}

}  // namespace dehn
