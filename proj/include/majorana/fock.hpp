// Single-particle Fock sector over labeled states |p, h>^{+-} with the space
// inversion U^s and the two charge conjugations U^c, tilde U^c.
//
// Momenta are integer tags; -tag is the reflected momentum and tag 0 is the
// rest label. The vacuum is taken invariant (phase +1) under all three
// operators, which is what turns operator rules into state rules.
#pragma once

#include "majorana/halfspin.hpp"

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace majorana::fock {

using cplx = std::complex<double>;

enum class Branch { Particle, Antiparticle };  //!< the + and - states

struct ModeLabel {
  int momentum;
  Helicity helicity;
  Branch branch;

  friend auto operator<=>(const ModeLabel&, const ModeLabel&) = default;
};

std::string to_string(const ModeLabel& l);

/// The momentum tags in use; must be closed under negation.
class MomentumSet {
 public:
  explicit MomentumSet(std::vector<int> tags);
  /// {-1, +1}, plus 0 when requested.
  static MomentumSet standard(bool with_rest = true);

  const std::vector<int>& tags() const { return tags_; }
  bool contains(int tag) const;
  std::vector<ModeLabel> labels() const;

 private:
  std::vector<int> tags_;
};

class FockVector {
 public:
  FockVector() = default;
  static FockVector basis(const ModeLabel& l) {
    FockVector v;
    v.add(l, 1.0);
    return v;
  }

  void add(const ModeLabel& l, cplx amplitude);
  const std::map<ModeLabel, cplx>& amplitudes() const { return amp_; }
  cplx amplitude(const ModeLabel& l) const;
  double norm() const;

  FockVector operator+(const FockVector& o) const;
  FockVector operator-(const FockVector& o) const;
  friend FockVector operator*(cplx c, const FockVector& v);

 private:
  std::map<ModeLabel, cplx> amp_;  // zero amplitudes are pruned
};

enum class OperatorName { SpaceInversion, ChargeConjugation, ChargeConjugationTilde };

std::string to_string(OperatorName n);

struct LabelImage {
  ModeLabel label;
  cplx phase;
};

/// A linear operator that sends each basis label to a phase times a label.
class SymmetryOp {
 public:
  SymmetryOp(std::string name, std::function<LabelImage(const ModeLabel&)> action)
      : name_(std::move(name)), action_(std::move(action)) {}

  const std::string& name() const { return name_; }
  LabelImage on(const ModeLabel& l) const { return action_(l); }
  FockVector operator()(const FockVector& v) const;

 private:
  std::string name_;
  std::function<LabelImage(const ModeLabel&)> action_;
};

/// |p up>^{+-} -> +i |-p down>^{+-},  |p down>^{+-} -> -i |-p up>^{+-}.
SymmetryOp space_inversion();
/// |p h>^+ -> +|p h>^-,  |p h>^- -> -|p h>^+.
SymmetryOp charge_conjugation_v1();
/// |p up>^+ -> -|p down>^-, |p down>^+ -> -|p up>^-,
/// |p up>^- -> +|p down>^+, |p down>^- -> +|p up>^+.
SymmetryOp charge_conjugation_v2();
SymmetryOp symmetry(OperatorName n);

/// Throws when some label maps outside the momentum set.
void check_closed(const SymmetryOp& op, const MomentumSet& momenta);

struct CommutatorRow {
  ModeLabel label;
  double commutator;      //!< |(AB - BA)|label>|
  double anticommutator;  //!< |(AB + BA)|label>|
};

std::vector<CommutatorRow> commutator_report(const SymmetryOp& a, const SymmetryOp& b,
                                             const MomentumSet& momenta);

/// Worst |A^2 |l> - s |l>| over labels for the given scalar s.
double square_residual(const SymmetryOp& a, cplx s, const MomentumSet& momenta);

/// Matrix of the operator on the span of `basis` (column j = image of basis j).
Eigen::MatrixXcd restrict(const SymmetryOp& op, const std::vector<ModeLabel>& basis);

//---------------------------------------------------------------------------//
// Eigen-combinations
//---------------------------------------------------------------------------//

struct JointSearch {
  std::string partner;  //!< name of the charge-conjugation operator
  /// Null-space dimension of [U^s - a; C - b] for a in {+1, -1}, b in {+i, -i}.
  std::array<std::array<int, 2>, 2> nullity{};
  bool exists{false};
  std::optional<Eigen::VectorXcd> witness;  //!< on (up+, down+, up-, down-) at p = 0
  double witness_residual{0};
  double smallest_singular{0};  //!< the rank certificate when none exists
};

/// Rank-based search for a common eigenvector of U^s and `charge` on the
/// four rest states.
JointSearch joint_eigenvector_search(const SymmetryOp& charge);

struct EigencombinationReport {
  double parity_covariance_residual;  //!< U^s(|p up> +- i|p down>) = +-(|-p up> +- i|-p down>)
  double parity_rest_residual;        //!< same at p = 0, as an eigen-equation
  double charge_residual;             //!< U^c(|p up>^+ +- i|p up>^-) = -+i (...)
  JointSearch with_charge;
  JointSearch with_charge_tilde;
};

EigencombinationReport eigencombination_suite(const MomentumSet& momenta);

//---------------------------------------------------------------------------//
// Operator rules
//---------------------------------------------------------------------------//

enum class Field { A, B };

struct OperatorRef {
  Field field;
  bool dagger;
  Helicity helicity;
  bool reflected;  //!< argument -p instead of p
};

/// U X U^{-1} = phase * Y
struct OperatorRule {
  OperatorRef in;
  cplx phase;
  OperatorRef out;
};

/// The rules as displayed for each operator, including the U^s rule whose
/// right-hand side is printed without a dagger.
std::vector<OperatorRule> displayed_operator_rules(OperatorName n);

struct StateDerivation {
  double mismatch{0};        //!< vs the state rules of symmetry(n)
  int corrected_daggers{0};  //!< right-hand sides read as creation operators
  bool consistent{true};     //!< no conflicting images for the same state
  std::vector<std::string> notes;
};

/// Turns operator rules into state rules via |p h>^+ = a^+|0>, |p h>^- = b^+|0>
/// and compares with the state table of the operator. With `identify_b_with_a`
/// the b states are the a states, and the rules are only checked for mutual
/// consistency.
StateDerivation derive_state_rules(OperatorName n, const MomentumSet& momenta,
                                   bool identify_b_with_a = false);

}  // namespace majorana::fock
