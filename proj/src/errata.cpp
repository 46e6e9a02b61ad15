#include "rabipat/errata.hpp"

#include <algorithm>

#include "rabipat/errors.hpp"

namespace rabipat {

const std::vector<Erratum>& errata() {
  static const std::vector<Erratum> list = {
      {"pattern-assembly", "pattern operators", "A_n = u_n1 (i sy) + u_n2 sz + u_n3 a",
       "A_n = u_n1 sx + u_n2 (-i sy) + u_n3 a",
       "only the implemented assembly reproduces H from sum_n lambda_n A_n' A_n (validate: reconstruction, "
       "negative-control)"},
      {"coupling-convention", "squeezed-frame couplings", "g1 = g cosh 2r, g2 = g sinh 2r",
       "g1 = g cosh r, g2 = g sinh r",
       "lab-frame and squeezed-frame spectra agree only for the implemented form; it also gives g1 + g2 = g e^r "
       "as the critical coupling requires (validate: coupling-convention)"},
      {"squeeze-vacuum-shift", "squeezed-frame constant", "S H S' = H_AR",
       "S H S' = H_AR + (dc/2)(sech 2r - 1)",
       "normal ordering of the squeezed quadratic part leaves this constant; needed for level-by-level agreement"},
      {"normal-eps-denominator", "generic normal-phase excitation energy", "(w0 - (xi1^2 + xi2^2)/2)^2 - (2 xi1 xi2/W)^2",
       "(w0 - (xi1^2 + xi2^2)/W)^2 - (2 xi1 xi2/W)^2",
       "dimensional consistency and the a'a coefficient of the normal-phase Hamiltonian"},
      {"normal-ground-constant", "generic normal-phase ground energy", "(eps - w0 + (xi1^2 + xi2^2)/W - W)/2",
       "(eps - w0 + (xi1^2 + xi2^2)/W)/2 - xi2^2/W - W/2",
       "the printed form drops the -xi2^2/W constant of the normal-phase Hamiltonian; E_G is then "
       "continuous at the critical point"},
      {"simulated-normal-radicand", "simulated normal-phase excitation energy", "... - g^4 sinh^2(2r)/dq",
       "... - (g^2 sinh(2r)/dq)^2",
       "substitution of (g1, g2) into the generic formula; the printed term is not an energy squared"},
      {"simulated-normal-constant", "simulated normal-phase constant", "-g1^2/dq - dq/2", "-g2^2/dq - dq/2",
       "spin-down block of the dispersive Hamiltonian including its s- s+ term"},
      {"superradiant-constant", "superradiant boson constant", "-((xi1+xi2) xc^-2 - (xi1-xi2))/(2 W xc^2)",
       "-((xi1+xi2) xc^-2 - (xi1-xi2))^2/(4 W xc^2)",
       "dimensional consistency; the squared form is the one printed for the simulated model and makes E_G "
       "continuous at the critical point"},
      {"superradiant-ground-bracket", "superradiant ground energy", "(eps - w0 - (xi1^2 + xi2^2)/W)/2",
       "(eps - A_sp)/2 with A_sp the a'a coefficient of the superradiant Hamiltonian",
       "Bogoliubov ground energy of the printed superradiant Hamiltonian"},
      {"simulated-superradiant-units", "simulated superradiant constant", "-[..]^2/(4 W gc^2) - W gc^-2/2",
       "-[..]^2/(4 dq gc^2) - (dq/4)(gc^2 + gc^-2)", "substitution W -> dq into the generic form"},
      {"simulated-superradiant-eps", "simulated superradiant excitation energy",
       "second bracket (dc sech(2r) dq - g^2 e^-2r)/(4 dq gc^2)",
       "sqrt(A^2 - 4B^2) of the substituted superradiant form, equal to "
       "w (2 sqrt(g1 g2)/(g1 + g2)) sqrt(1 - gc^-4)",
       "substitution into the generic form; agrees with the generic closed form for eps_sp"},
  };
  return list;
}

const Erratum& erratum(std::string_view id) {
  for (const auto& e : errata()) {
    if (e.id == id) return e;
  }
  throw InvalidArgument("unknown erratum id: " + std::string(id));
}

std::vector<Erratum> errata_for(std::string_view command, std::string_view model) {
  std::vector<std::string_view> ids;
  const bool simulated = model == "parametric-jc" || model == "squeezed-frame" || model == "dispersive";
  if (command == "patterns") ids = {"pattern-assembly"};
  if (command == "spectrum" || command == "phase-diagram") {
    if (simulated) ids = {"coupling-convention"};
    if (model == "parametric-jc") ids.push_back("squeeze-vacuum-shift");
  }
  if (command == "analytic") {
    ids = {"normal-eps-denominator", "normal-ground-constant", "superradiant-constant", "superradiant-ground-bracket"};
    if (model != "anisotropic") {
      for (auto id : {"coupling-convention", "simulated-normal-radicand", "simulated-normal-constant",
                      "simulated-superradiant-units", "simulated-superradiant-eps"}) {
        ids.push_back(id);
      }
    }
  }
  std::vector<Erratum> out;
  if (command == "validate") return errata();
  for (auto id : ids) out.push_back(erratum(id));
  return out;
}

std::string format_erratum(const Erratum& e) {
  return "erratum " + e.id + ": printed [" + e.printed + "] implemented [" + e.implemented + "]";
}

}  // namespace rabipat
