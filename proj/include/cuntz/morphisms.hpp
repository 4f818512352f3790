#pragma once

// Representations of lexicographic systems from generators and relations,
// and the explicit isomorphism O_{E(m,n)} = O_{E(m,mn)}.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuntz/steprep.hpp"

namespace cuntz {

/// How equality is decided in the target: normal forms in O_target, or the
/// step model at the default levels (untwisted targets only).
enum class TargetKind { kAlgebra, kStep };

/// Generator slot (a, i): 0-based generator a, digit i < m_a.
using GeneratorKey = std::pair<int, Index>;

struct GeneratorAssignment {
  SystemSpec source;
  SystemSpec target;
  TargetKind kind = TargetKind::kAlgebra;
  std::map<GeneratorKey, AlgebraElement> images;

  /// U_{a,i} = e(e_a; i) in the algebra of the same spec.
  static GeneratorAssignment canonical(const SystemSpec& spec, TargetKind kind = TargetKind::kAlgebra);

  const AlgebraElement& image(int a, Index i) const;
  bool target_equals(const AlgebraElement& x, const AlgebraElement& y) const;
};

enum class RelationKind { kMissing, kIsometry, kOrthogonality, kCommutation, kCuntzSum };

struct RelationViolation {
  RelationKind kind;
  std::string detail;  ///< 1-based generator labels, e.g. `U(1,0)* U(1,1) != 0`
};

struct RelationReport {
  std::size_t checked = 0;
  std::vector<RelationViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

RelationReport check_relations(const GeneratorAssignment& a);

/// An assignment whose relations have been checked. Only `verify` makes one.
class VerifiedAssignment {
 public:
  static std::optional<VerifiedAssignment> verify(GeneratorAssignment a, RelationReport* report = nullptr);
  const GeneratorAssignment& assignment() const { return a_; }

 private:
  explicit VerifiedAssignment(GeneratorAssignment a) : a_(std::move(a)) {}
  GeneratorAssignment a_;
};

/// phi(x): product of the images along factor_monomial(x, order), divided by
/// the source multiplier phase of that product.
AlgebraElement extend(const VerifiedAssignment& v, const BasisMonomial& x, const std::vector<int>& order);
AlgebraElement extend(const VerifiedAssignment& v, const BasisMonomial& x);
/// Checks relations first; throws DomainError listing violations.
AlgebraElement extend(const GeneratorAssignment& a, const BasisMonomial& x, const std::vector<int>& order);

/// phi_*(a) = sum c phi(x) phi(y)*.
AlgebraElement apply(const VerifiedAssignment& v, const AlgebraElement& a);

struct IsoPair {
  SystemSpec e;                   ///< E(m, n)
  SystemSpec f;                   ///< E(m, mn)
  GeneratorAssignment forward;    ///< psi: generators of F -> O_E
  GeneratorAssignment backward;   ///< phi: generators of E -> O_F
};

IsoPair factor_iso(Index m, Index n);

struct RoundtripReport {
  bool ok = false;
  std::string reason;
};

RoundtripReport roundtrip_report(const IsoPair& iso);
bool verify_roundtrip(const IsoPair& iso);

/// e((a,b); j) = psi((b,0); i)* psi((a,b); i m^a n^b + j) in O_E for every
/// j and every admissible i, with a + b <= max_total.
bool verify_surjectivity(const IsoPair& iso, int max_total);

}  // namespace cuntz
