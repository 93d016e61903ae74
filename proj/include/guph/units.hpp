#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

// Atomic units are used throughout the library: hbar = m_e = alpha = 1,
// where alpha = e^2/(4 pi eps0) is the Coulomb strength. Energies are in
// Hartree, lengths in Bohr radii, momenta in 1/a0. SI values enter only
// through the conversion helpers below.

namespace guph::units {

// Primary constant table. h and c are exact by the 2019 SI definition;
// the electron mass and the fine-structure constant are CODATA 2018
// recommended values (physics.nist.gov/cuu/Constants).
inline constexpr double planck_h_si = 6.62607015e-34;         // J s, exact
inline constexpr double speed_of_light_si = 299792458.0;      // m/s, exact
inline constexpr double electron_mass_si = 9.1093837015e-31;  // kg
inline constexpr double fine_structure_alpha = 7.2973525693e-3;

// Published rounded values, kept for cross-checks. The working values in
// PhysicalConstants are derived from the primary table above so that
// a0 = hbar^2/(m alpha) and Eh = m alpha^2/hbar^2 hold to machine
// precision; the independently rounded CODATA figures sit ~2e-12 away.
inline constexpr double codata_bohr_radius_fm = 5.29177210903e4;       // CODATA 2018
inline constexpr double codata_hartree_over_h_mhz = 6.579683920502e9;  // CODATA 2018

struct PhysicalConstants {
    // atomic-unit values
    double hbar_au;
    double mass_e_au;
    double alpha_au;        // Coulomb strength e^2/(4 pi eps0)
    double bohr_radius_au;
    double hartree_au;
    double planck_h_au;     // 2 pi

    // SI-derived values
    double hbar_si;              // J s
    double mass_e_kg;            // kg
    double alpha_si;             // J m
    double bohr_radius_m;        // m
    double bohr_radius_fm;       // fm
    double hartree_j;            // J
    double planck_h_j_s;         // J s
    double hartree_over_h_mhz;   // MHz
};

constexpr PhysicalConstants make_constants() {
    PhysicalConstants c{};
    c.hbar_au = 1.0;
    c.mass_e_au = 1.0;
    c.alpha_au = 1.0;
    c.bohr_radius_au = 1.0;  // hbar^2/(m alpha)
    c.hartree_au = 1.0;      // m alpha^2/hbar^2
    c.planck_h_au = 2.0 * std::numbers::pi;

    c.hbar_si = planck_h_si / (2.0 * std::numbers::pi);
    c.mass_e_kg = electron_mass_si;
    c.alpha_si = fine_structure_alpha * c.hbar_si * speed_of_light_si;
    c.bohr_radius_m = c.hbar_si / (electron_mass_si * speed_of_light_si * fine_structure_alpha);
    c.bohr_radius_fm = c.bohr_radius_m * 1e15;
    c.hartree_j = fine_structure_alpha * fine_structure_alpha * electron_mass_si *
                  speed_of_light_si * speed_of_light_si;
    c.planck_h_j_s = planck_h_si;
    c.hartree_over_h_mhz = c.hartree_j / planck_h_si * 1e-6;
    return c;
}

inline constexpr PhysicalConstants constants = make_constants();

inline double energy_au_to_joule(double e_au) { return e_au * constants.hartree_j; }
inline double joule_to_energy_au(double e_j) { return e_j / constants.hartree_j; }
inline double energy_au_to_mhz(double e_au) { return e_au * constants.hartree_over_h_mhz; }
inline double mhz_to_energy_au(double f_mhz) { return f_mhz / constants.hartree_over_h_mhz; }
inline double length_au_to_fm(double l_au) { return l_au * constants.bohr_radius_fm; }
inline double fm_to_length_au(double l_fm) { return l_fm / constants.bohr_radius_fm; }

// Deformation constants of the modified commutator
// [X_i, P_j] = i hbar [(1 + beta P^2) delta_ij + beta' P_i P_j].
struct DeformationParams {
    double beta;        // 1/momentum^2, a.u.
    double beta_prime;  // 1/momentum^2, a.u.

    // beta' = 2 beta, the case in which R^2 factorizes to first order
    static DeformationParams factorized(double beta);
    static DeformationParams general(double beta, double beta_prime);

    bool factorizable() const { return beta_prime == 2.0 * beta; }
};

// Returns beta after checking beta' = 2 beta holds exactly; the closed-form
// solver accepts no other case.
double factorized_beta(const DeformationParams& params);

struct MinimalLength {
    double au;
    double fm;
};

// (Delta X)_min = hbar sqrt(3 beta + beta')
MinimalLength minimal_length(const DeformationParams& params);

// Operator representations in terms of the canonical x_i, p_i:
//   X_i = x_i + sym_x_p2 (p^2 x_i + x_i p^2) + left_x_p2 p^2 x_i
//             + proj_pp_x p_i p_j x_j + gamma p_i
//   P_i = p_i (momentum_c0 + momentum_c2 p^2)
enum class Representation { brau, akhoury_yao, stetsko_tkachuk };

struct RepresentationSpec {
    Representation name;
    double gamma;       // akhoury_yao free parameter, fixed to 0
    double sym_x_p2;
    double left_x_p2;
    double proj_pp_x;
    double momentum_c0;
    double momentum_c2;
};

RepresentationSpec representation(Representation name, const DeformationParams& params);

// Scalar deformed momentum P(p) = p (c0 + c2 p^2) of the representation.
double momentum_rep_coefficient(const RepresentationSpec& spec, double p);

}  // namespace guph::units
