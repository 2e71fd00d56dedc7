#include "majorana/fock.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace majorana::fock {
namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kRankTol = 1e-10;

Branch other(Branch b) {
  return b == Branch::Particle ? Branch::Antiparticle : Branch::Particle;
}

const char* arrow(Helicity h) { return h == Helicity::Up ? "up" : "down"; }

std::vector<ModeLabel> rest_basis() {
  return {{0, Helicity::Up, Branch::Particle},
          {0, Helicity::Down, Branch::Particle},
          {0, Helicity::Up, Branch::Antiparticle},
          {0, Helicity::Down, Branch::Antiparticle}};
}

}  // namespace

std::string to_string(const ModeLabel& l) {
  std::ostringstream os;
  os << "|" << l.momentum << "," << arrow(l.helicity) << ">"
     << (l.branch == Branch::Particle ? "+" : "-");
  return os.str();
}

std::string to_string(OperatorName n) {
  switch (n) {
    case OperatorName::SpaceInversion: return "U^s";
    case OperatorName::ChargeConjugation: return "U^c";
    case OperatorName::ChargeConjugationTilde: return "tilde U^c";
  }
  return "?";
}

//---------------------------------------------------------------------------//
MomentumSet::MomentumSet(std::vector<int> tags) : tags_(std::move(tags)) {
  std::sort(tags_.begin(), tags_.end());
  tags_.erase(std::unique(tags_.begin(), tags_.end()), tags_.end());
  if (tags_.empty()) throw std::invalid_argument("MomentumSet: empty");
  for (int t : tags_) {
    if (!contains(-t)) {
      throw std::invalid_argument("MomentumSet: not closed under p -> -p (missing " +
                                  std::to_string(-t) + ")");
    }
  }
}

MomentumSet MomentumSet::standard(bool with_rest) {
  return with_rest ? MomentumSet({-1, 0, 1}) : MomentumSet({-1, 1});
}

bool MomentumSet::contains(int tag) const {
  return std::binary_search(tags_.begin(), tags_.end(), tag);
}

std::vector<ModeLabel> MomentumSet::labels() const {
  std::vector<ModeLabel> out;
  for (int t : tags_)
    for (Branch b : {Branch::Particle, Branch::Antiparticle})
      for (Helicity h : kHelicities) out.push_back({t, h, b});
  return out;
}

//---------------------------------------------------------------------------//
void FockVector::add(const ModeLabel& l, cplx amplitude) {
  if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag())) {
    throw std::invalid_argument("FockVector: non-finite amplitude");
  }
  const cplx sum = amplitude + this->amplitude(l);
  if (sum == cplx(0.0)) {
    amp_.erase(l);
  } else {
    amp_[l] = sum;
  }
}

cplx FockVector::amplitude(const ModeLabel& l) const {
  const auto it = amp_.find(l);
  return it == amp_.end() ? cplx(0.0) : it->second;
}

double FockVector::norm() const {
  double s = 0;
  for (const auto& [l, a] : amp_) s += std::norm(a);
  return std::sqrt(s);
}

FockVector FockVector::operator+(const FockVector& o) const {
  FockVector r = *this;
  for (const auto& [l, a] : o.amp_) r.add(l, a);
  return r;
}

FockVector FockVector::operator-(const FockVector& o) const { return *this + (-1.0) * o; }

FockVector operator*(cplx c, const FockVector& v) {
  FockVector r;
  for (const auto& [l, a] : v.amp_) r.add(l, c * a);
  return r;
}

FockVector SymmetryOp::operator()(const FockVector& v) const {
  FockVector r;
  for (const auto& [l, a] : v.amplitudes()) {
    const LabelImage img = action_(l);
    r.add(img.label, img.phase * a);
  }
  return r;
}

//---------------------------------------------------------------------------//
SymmetryOp space_inversion() {
  return {"U^s", [](const ModeLabel& l) -> LabelImage {
            const cplx phase = l.helicity == Helicity::Up ? kI : -kI;
            return {{-l.momentum, flipped(l.helicity), l.branch}, phase};
          }};
}

SymmetryOp charge_conjugation_v1() {
  return {"U^c", [](const ModeLabel& l) -> LabelImage {
            const double s = l.branch == Branch::Particle ? 1.0 : -1.0;
            return {{l.momentum, l.helicity, other(l.branch)}, s};
          }};
}

SymmetryOp charge_conjugation_v2() {
  return {"tilde U^c", [](const ModeLabel& l) -> LabelImage {
            const double s = l.branch == Branch::Particle ? -1.0 : 1.0;
            return {{l.momentum, flipped(l.helicity), other(l.branch)}, s};
          }};
}

SymmetryOp symmetry(OperatorName n) {
  switch (n) {
    case OperatorName::SpaceInversion: return space_inversion();
    case OperatorName::ChargeConjugation: return charge_conjugation_v1();
    case OperatorName::ChargeConjugationTilde: return charge_conjugation_v2();
  }
  throw std::invalid_argument("symmetry: unknown operator");
}

void check_closed(const SymmetryOp& op, const MomentumSet& momenta) {
  for (const ModeLabel& l : momenta.labels()) {
    if (!momenta.contains(op.on(l).label.momentum)) {
      throw std::invalid_argument(op.name() + " maps " + to_string(l) +
                                  " outside the momentum set");
    }
  }
}

std::vector<CommutatorRow> commutator_report(const SymmetryOp& a, const SymmetryOp& b,
                                             const MomentumSet& momenta) {
  check_closed(a, momenta);
  check_closed(b, momenta);
  std::vector<CommutatorRow> rows;
  for (const ModeLabel& l : momenta.labels()) {
    const FockVector v = FockVector::basis(l);
    const FockVector ab = a(b(v));
    const FockVector ba = b(a(v));
    rows.push_back({l, (ab - ba).norm(), (ab + ba).norm()});
  }
  return rows;
}

double square_residual(const SymmetryOp& a, cplx s, const MomentumSet& momenta) {
  check_closed(a, momenta);
  double r = 0;
  for (const ModeLabel& l : momenta.labels()) {
    const FockVector v = FockVector::basis(l);
    r = std::max(r, (a(a(v)) - s * v).norm());
  }
  return r;
}

Eigen::MatrixXcd restrict(const SymmetryOp& op, const std::vector<ModeLabel>& basis) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const LabelImage img = op.on(basis[j]);
    const auto it = std::find(basis.begin(), basis.end(), img.label);
    if (it == basis.end()) {
      throw std::invalid_argument("restrict: " + op.name() + " leaves the subspace");
    }
    m(it - basis.begin(), j) = img.phase;
  }
  return m;
}

//---------------------------------------------------------------------------//
JointSearch joint_eigenvector_search(const SymmetryOp& charge) {
  const std::vector<ModeLabel> basis = rest_basis();
  const Eigen::MatrixXcd s = restrict(space_inversion(), basis);
  const Eigen::MatrixXcd c = restrict(charge, basis);
  const Eigen::MatrixXcd one = Eigen::MatrixXcd::Identity(4, 4);

  JointSearch out;
  out.partner = charge.name();
  out.smallest_singular = std::numeric_limits<double>::infinity();
  const std::array<cplx, 2> parity{1.0, -1.0};
  const std::array<cplx, 2> charge_values{kI, -kI};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Eigen::MatrixXcd stacked(8, 4);
      stacked << s - parity[i] * one, c - charge_values[j] * one;
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      int nullity = 0;
      for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv[k] <= kRankTol) ++nullity;
      out.nullity[i][j] = nullity;
      out.smallest_singular = std::min(out.smallest_singular, sv[sv.size() - 1]);
      if (nullity > 0 && !out.witness) {
        Eigen::VectorXcd w = svd.matrixV().col(3);
        // Fix the phase so the largest component is real and positive.
        Eigen::Index k = 0;
        w.cwiseAbs().maxCoeff(&k);
        w *= std::conj(w[k]) / std::abs(w[k]);
        out.witness = w;
        out.witness_residual = std::max((s * w - parity[i] * w).norm(),
                                        (c * w - charge_values[j] * w).norm());
      }
    }
  }
  out.exists = out.witness.has_value();
  if (out.exists) out.smallest_singular = 0;
  return out;
}

EigencombinationReport eigencombination_suite(const MomentumSet& momenta) {
  const SymmetryOp us = space_inversion();
  const SymmetryOp uc = charge_conjugation_v1();
  check_closed(us, momenta);
  EigencombinationReport r{};
  for (int t : momenta.tags()) {
    const auto ket = [](int p, Helicity h, Branch b) { return FockVector::basis({p, h, b}); };
    for (double s : {1.0, -1.0}) {
      const FockVector here = ket(t, Helicity::Up, Branch::Particle) +
                              (s * kI) * ket(t, Helicity::Down, Branch::Particle);
      const FockVector there = ket(-t, Helicity::Up, Branch::Particle) +
                               (s * kI) * ket(-t, Helicity::Down, Branch::Particle);
      const double res = (us(here) - s * there).norm();
      r.parity_covariance_residual = std::max(r.parity_covariance_residual, res);
      if (t == 0) r.parity_rest_residual = std::max(r.parity_rest_residual, res);

      const FockVector q = ket(t, Helicity::Up, Branch::Particle) +
                           (s * kI) * ket(t, Helicity::Up, Branch::Antiparticle);
      r.charge_residual = std::max(r.charge_residual, (uc(q) - (-s * kI) * q).norm());
    }
  }
  if (!momenta.contains(0)) r.parity_rest_residual = std::numeric_limits<double>::quiet_NaN();
  r.with_charge = joint_eigenvector_search(uc);
  r.with_charge_tilde = joint_eigenvector_search(charge_conjugation_v2());
  return r;
}

//---------------------------------------------------------------------------//
std::vector<OperatorRule> displayed_operator_rules(OperatorName n) {
  using H = Helicity;
  const auto op = [](Field f, bool dag, H h, bool refl = false) {
    return OperatorRef{f, dag, h, refl};
  };
  switch (n) {
    case OperatorName::SpaceInversion:
      return {{op(Field::A, false, H::Up), -kI, op(Field::A, false, H::Down, true)},
              {op(Field::A, false, H::Down), kI, op(Field::A, false, H::Up, true)},
              {op(Field::B, true, H::Up), kI, op(Field::B, true, H::Down, true)},
              {op(Field::B, true, H::Down), -kI, op(Field::B, false, H::Up, true)}};
    case OperatorName::ChargeConjugation:
      return {{op(Field::A, false, H::Up), 1.0, op(Field::B, false, H::Up)},
              {op(Field::A, false, H::Down), 1.0, op(Field::B, false, H::Down)},
              {op(Field::B, true, H::Up), -1.0, op(Field::A, true, H::Up)},
              {op(Field::B, true, H::Down), -1.0, op(Field::A, true, H::Down)}};
    case OperatorName::ChargeConjugationTilde:
      return {{op(Field::A, false, H::Up), -1.0, op(Field::B, false, H::Down)},
              {op(Field::A, false, H::Down), -1.0, op(Field::B, false, H::Up)},
              {op(Field::B, true, H::Up), 1.0, op(Field::A, true, H::Down)},
              {op(Field::B, true, H::Down), 1.0, op(Field::A, true, H::Up)}};
  }
  throw std::invalid_argument("displayed_operator_rules: unknown operator");
}

StateDerivation derive_state_rules(OperatorName n, const MomentumSet& momenta,
                                   bool identify_b_with_a) {
  const SymmetryOp target = symmetry(n);
  check_closed(target, momenta);
  StateDerivation out;
  const auto branch = [identify_b_with_a](Field f) {
    return f == Field::A || identify_b_with_a ? Branch::Particle : Branch::Antiparticle;
  };

  std::map<ModeLabel, FockVector> derived;
  for (OperatorRule rule : displayed_operator_rules(n)) {
    // (U X U^-1)^dagger = U X^dagger U^-1 for unitary U.
    if (!rule.in.dagger) {
      rule.in.dagger = true;
      rule.out.dagger = !rule.out.dagger;
      rule.phase = std::conj(rule.phase);
    }
    if (!rule.out.dagger) {
      ++out.corrected_daggers;
      rule.out.dagger = true;
      out.notes.push_back(to_string(n) + ": image of " +
                          std::string(rule.in.field == Field::A ? "a" : "b") + "^+_" +
                          arrow(rule.in.helicity) + " read as a creation operator");
    }
    for (int t : momenta.tags()) {
      const ModeLabel in{t, rule.in.helicity, branch(rule.in.field)};
      const ModeLabel img{rule.out.reflected ? -t : t, rule.out.helicity,
                          branch(rule.out.field)};
      const FockVector v = rule.phase * FockVector::basis(img);
      const auto [it, fresh] = derived.try_emplace(in, v);
      if (!fresh && (it->second - v).norm() > 0) {
        out.consistent = false;
        out.notes.push_back(to_string(n) + ": conflicting images for " + to_string(in));
      }
    }
  }
  if (!identify_b_with_a) {
    for (const ModeLabel& l : momenta.labels()) {
      const auto it = derived.find(l);
      const FockVector expected = target(FockVector::basis(l));
      out.mismatch = std::max(out.mismatch, it == derived.end()
                                                ? expected.norm()
                                                : (it->second - expected).norm());
    }
  }
  return out;
}

}  // namespace majorana::fock
