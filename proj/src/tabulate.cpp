#include "majorana/report.hpp"
#include "majorana/spin1.hpp"

#include <ostream>

namespace majorana {
namespace {

template <typename Derived>
void row(std::ostream& os, const std::string& name, const Eigen::MatrixBase<Derived>& v) {
  os << name;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    os << '\t' << format_number(v[k].real()) << '\t' << format_number(v[k].imag());
  }
  os << '\n';
}

void header(std::ostream& os, const FourMomentum<double>& p, int components) {
  const Real3<double> q = p.three_momentum();
  os << "# m " << format_number(p.mass) << " p (" << format_number(q.x()) << ", "
     << format_number(q.y()) << ", " << format_number(q.z()) << ") E "
     << format_number(p.energy()) << '\n';
  os << "spinor";
  for (int k = 0; k < components; ++k) os << "\tre" << k << "\tim" << k;
  os << '\n';
}

}  // namespace

std::optional<TableKind> parse_table_kind(const std::string& name) {
  if (name == "lambda") return TableKind::Lambda;
  if (name == "rho") return TableKind::Rho;
  if (name == "dirac") return TableKind::Dirac;
  if (name == "mr") return TableKind::Mr;
  return std::nullopt;
}

void tabulate(std::ostream& os, const FourMomentum<double>& p,
              const PhaseConvention<double>& conv, TableKind what) {
  p.validate();
  if (what == TableKind::Mr) {
    header(os, p, 6);
    const std::array<const char*, 3> names{"up", "0", "down"};
    for (Spin1Helicity h : kSpin1Helicities) {
      const MrSpinors<double> s = mr_spinors(p, h, conv);
      const std::string n = names[index(h)];
      row(os, "U+_" + n, s.u_real);
      row(os, "V+_" + n, s.u_imag);
      row(os, "U-_" + n, s.v_real);
      row(os, "V-_" + n, s.v_imag);
    }
    return;
  }
  const SpinorBasis<double> b = build_spinor_basis(p, conv);
  header(os, p, 4);
  const std::array<const char*, 2> names{"up", "down"};
  for (int k = 0; k < 2; ++k) {
    const std::string n = names[k];
    switch (what) {
      case TableKind::Lambda:
        row(os, "lambda^S_" + n, b.lambda_s[k]);
        row(os, "lambda^A_" + n, b.lambda_a[k]);
        break;
      case TableKind::Rho:
        row(os, "rho^S_" + n, b.rho_s[k]);
        row(os, "rho^A_" + n, b.rho_a[k]);
        break;
      case TableKind::Dirac:
        row(os, "u_" + n, b.u[k]);
        row(os, "v_" + n, b.v[k]);
        break;
      case TableKind::Mr: break;
    }
  }
}

}  // namespace majorana
