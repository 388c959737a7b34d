#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "p1bimod/colimit.hpp"
#include "p1bimod/watts.hpp"

namespace p1bimod {

/// i -> l_i, only positive counts stored.
using H1Mults = std::map<long long, std::size_t>;

/// F = (+)_i H^1((-)(i))^l_i (+) H^0(- (x) torsion).
struct Decomposition {
  TorsionSheaf torsion;
  H1Mults h1;

  bool operator==(const Decomposition&) const = default;
  std::string to_string() const;
};

/// (+)_i generator_h1(i)^l_i with i ascending.
FunctorData h1_model(Field field, const H1Mults& mults, long long lo, long long hi);
/// h1_model followed by generator_h0_torsion, in that block order.
FunctorData compose(Field field, const Decomposition& d, long long lo, long long hi);

/// dim F(O(n)) predicted by the decomposition.
std::size_t predicted_dim(const Decomposition& d, long long n);

/// l_i from kernel dimensions kdims[n - lo]: with e(n) = d(n-1) - d(n),
/// l_i = e(-i-1) - e(-i). Throws WINDOW_TOO_SMALL unless the top dimension
/// is 0 and e(lo+1) == e(lo+2); NOT_ADMISSIBLE on a negative count or a
/// failed reconstruction.
H1Mults h1_multiplicities_from_dims(long long lo, const std::vector<std::size_t>& kdims);

struct H1Isomorphism {
  FunctorData model;
  NatTransWindow to_model;    // Ker -> model
  NatTransWindow from_model;  // model -> Ker
};

/// Natural isomorphism between ker and (+) H^1((-)(i))^l_i. The graded dual
/// of ker is a free k[x0, x1]-module; minimal generators are chosen degree by
/// degree as complements of the part generated from below, and the map sends
/// the dual Cech basis to monomials times those generators. Throws
/// NOT_ADMISSIBLE if the generator counts or the invertibility fail.
H1Isomorphism build_h1_isomorphism(const FunctorData& ker, const H1Mults& mults);

/// Lambda : F -> Ker splitting theta by descending induction from the first
/// degree where Ker vanishes: B_(n-1) is the greedy complement of
/// theta(ker(K alpha, K beta)) inside F(alpha)^-1 B_n cap F(beta)^-1 B_n.
/// Throws WINDOW_TOO_SMALL if Ker(O(hi)) != 0 and NOT_ADMISSIBLE when a
/// complement fails to exhaust F(O(n-1)).
NatTransWindow build_splitting(const FunctorData& f, const KernelData& ker, const P1Point& alpha,
                               const P1Point& beta);

/// The points build_splitting uses: alpha avoids W(F); beta is the first
/// support point, or the second avoiding point when W(F) = 0.
std::pair<P1Point, P1Point> splitting_points(const TorsionSheaf& w, Field field);

struct SplittingCertificate {
  long long lo = 0, hi = 0;
  FunctorData kernel;
  FunctorData h1_model;       // h1_model(decomposition.h1)
  FunctorData torsion_model;  // generator_h0_torsion(W)
  FunctorData model;          // compose(decomposition)
  NatTransWindow theta, gamma, lambda;
  NatTransWindow h1_iso;  // Ker -> h1 model
  NatTransWindow iso;     // F -> model, rows (h1_iso * lambda ; gamma)
};

struct CertificateCheck {
  bool theta_natural = false;
  bool gamma_natural = false;
  bool lambda_natural = false;
  bool lambda_theta_identity = false;
  bool h1_iso_natural = false;
  bool iso_natural = false;
  bool iso_invertible = false;
  bool ok() const {
    return theta_natural && gamma_natural && lambda_natural && lambda_theta_identity && h1_iso_natural &&
           iso_natural && iso_invertible;
  }
};

CertificateCheck verify_certificate(const FunctorData& f, const SplittingCertificate& c);

struct DecomposeResult {
  Decomposition decomposition;
  SplittingCertificate certificate;
  CertificateCheck check;
  GammaData gamma;
};

/// Full structure decomposition with a checked certificate. Throws
/// WINDOW_TOO_SMALL, SPLIT_FAILURE, NOT_ADMISSIBLE.
DecomposeResult decompose(const FunctorData& f);
/// Same, reusing an already computed Gamma and kernel.
DecomposeResult decompose(const FunctorData& f, const GammaData& g, const KernelData& k);

enum class CheckMode { Quick, Verify };

struct IntegralVerdict {
  bool dims_constant = false;
  std::optional<bool> gamma_iso;         // verify mode only
  std::optional<bool> exact_on_bundles;  // verify mode only
  bool value() const { return dims_constant; }
};

/// Koszul sequences for every pair among the first three enumerated points
/// and every j with lo <= j - 2, j <= hi.
std::vector<SesOfBundles> koszul_battery(const FunctorData& f);

/// Throws DISAGREEMENT in verify mode if the three verdicts differ.
IntegralVerdict integral_transform_verdict(const FunctorData& f, CheckMode mode);
bool is_integral_transform(const FunctorData& f, CheckMode mode);

/// r when dims are identically 1 and W(F) = k(r). In verify mode also
/// checks that "integral transform with W = k(r)" and "exact on bundles with
/// some dimension 1" agree, throwing DISAGREEMENT otherwise.
std::optional<P1Point> is_pullback(const FunctorData& f, CheckMode mode);

/// The direct system F(O_1) -> F(O_2) -> ... at p, with O_i presented as
/// l_p^i : O(lo) -> O(lo + i).
MapSequence mu_system(const FunctorData& f, const P1Point& p);
/// F(O(lo)) -> ... -> F(O(hi)) along F(l_p).
MapSequence stalk_system(const FunctorData& f, const P1Point& p);

struct PropertyEntry {
  std::string claim;
  bool pass = false;
  // "pass", "fail" or "window_too_small"; the last also covers direct
  // systems whose colimit the window cannot confirm
  std::string status;
  std::string detail;
};

struct PropertyReport {
  std::vector<PropertyEntry> entries;
  /// No entry has status "fail".
  bool ok() const;
  const PropertyEntry* find(const std::string& claim) const;
};

PropertyReport run_property_suite(const FunctorData& f);

}  // namespace p1bimod
