#include <doctest.h>

#include <cmath>
#include <random>

#include "guph/units.hpp"

using namespace guph::units;

TEST_CASE("derived constants satisfy a0 = hbar^2/(m alpha) in both unit systems") {
    const auto& c = constants;

    // atomic units
    CHECK(c.bohr_radius_au ==
          doctest::Approx(c.hbar_au * c.hbar_au / (c.mass_e_au * c.alpha_au)).epsilon(1e-12));
    CHECK(c.hartree_au ==
          doctest::Approx(c.mass_e_au * c.alpha_au * c.alpha_au / (c.hbar_au * c.hbar_au))
              .epsilon(1e-12));

    // SI
    CHECK(c.bohr_radius_m ==
          doctest::Approx(c.hbar_si * c.hbar_si / (c.mass_e_kg * c.alpha_si)).epsilon(1e-12));
    CHECK(c.hartree_j ==
          doctest::Approx(c.mass_e_kg * c.alpha_si * c.alpha_si / (c.hbar_si * c.hbar_si))
              .epsilon(1e-12));
}

TEST_CASE("derived constants agree with the independently rounded CODATA 2018 figures") {
    // The published values are rounded independently of each other, so the
    // internally consistent chain can sit a few parts in 1e12 away.
    CHECK(constants.bohr_radius_fm == doctest::Approx(codata_bohr_radius_fm).epsilon(1e-11));
    CHECK(constants.hartree_over_h_mhz ==
          doctest::Approx(codata_hartree_over_h_mhz).epsilon(1e-11));
    CHECK(constants.planck_h_au == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
}

TEST_CASE("unit conversions round-trip") {
    std::mt19937 rng(20210817);
    std::uniform_real_distribution<double> exponent(-20.0, 5.0);
    for (int i = 0; i < 200; ++i) {
        const double e = std::pow(10.0, exponent(rng));
        CHECK(joule_to_energy_au(energy_au_to_joule(e)) == doctest::Approx(e).epsilon(1e-12));
        CHECK(mhz_to_energy_au(energy_au_to_mhz(e)) == doctest::Approx(e).epsilon(1e-12));
        CHECK(fm_to_length_au(length_au_to_fm(e)) == doctest::Approx(e).epsilon(1e-12));
    }
}

TEST_CASE("minimal length hbar sqrt(3 beta + beta')") {
    CHECK(minimal_length(DeformationParams::general(0.0, 0.0)).au == 0.0);

    const auto ml = minimal_length(DeformationParams::general(1e-6, 2e-6));
    CHECK(ml.au == doctest::Approx(2.2360679774997897e-3).epsilon(1e-13));  // sqrt(5e-6)
    CHECK(ml.fm == doctest::Approx(118.32762157261880).epsilon(1e-12));

    // factorized case collapses to hbar sqrt(5 beta)
    for (double beta : {1e-8, 1e-6, 1e-4, 1e-2}) {
        CHECK(minimal_length(DeformationParams::factorized(beta)).au ==
              doctest::Approx(std::sqrt(5.0 * beta)).epsilon(1e-14));
    }
}

TEST_CASE("minimal length is monotone in each deformation parameter") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> mag(-8.0, -2.0);
    for (int i = 0; i < 100; ++i) {
        const double b = std::pow(10.0, mag(rng));
        const double bp = std::pow(10.0, mag(rng));
        const double base = minimal_length(DeformationParams::general(b, bp)).au;
        CHECK(minimal_length(DeformationParams::general(2.0 * b, bp)).au > base);
        CHECK(minimal_length(DeformationParams::general(b, 2.0 * bp)).au > base);
    }
}

TEST_CASE("deformation parameter validation") {
    CHECK_THROWS_AS(DeformationParams::general(-1e-6, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(DeformationParams::general(0.0, -1e-6), std::invalid_argument);
    CHECK_THROWS_AS(DeformationParams::factorized(-1.0), std::invalid_argument);

    CHECK(DeformationParams::factorized(1e-6).factorizable());
    CHECK(factorized_beta(DeformationParams::factorized(3e-7)) == 3e-7);
    CHECK_THROWS_AS(factorized_beta(DeformationParams::general(1e-6, 1e-6)),
                    std::invalid_argument);
}

TEST_CASE("momentum representation coefficients") {
    const auto undeformed = DeformationParams::general(0.0, 0.0);
    CHECK(momentum_rep_coefficient(representation(Representation::brau, undeformed), 3.0) == 3.0);

    // P_i = p_i identically in the akhoury_yao representation
    const auto ay = representation(Representation::akhoury_yao,
                                   DeformationParams::general(2e-3, 5e-3));
    CHECK(momentum_rep_coefficient(ay, 1.7) == 1.7);
    CHECK(ay.gamma == 0.0);

    // brau and stetsko_tkachuk evaluate identically at beta' = 2 beta
    const auto params = DeformationParams::factorized(3.7e-4);
    const auto brau = representation(Representation::brau, params);
    const auto st = representation(Representation::stetsko_tkachuk, params);
    for (double p = 0.125; p < 64.0; p *= 2.0) {
        CHECK(momentum_rep_coefficient(brau, p) == momentum_rep_coefficient(st, p));
    }
}

TEST_CASE("stetsko_tkachuk position correction (2 beta - beta')/4 vanishes at beta' = 2 beta") {
    const auto general = representation(Representation::stetsko_tkachuk,
                                        DeformationParams::general(1e-3, 1e-3));
    CHECK(general.sym_x_p2 == doctest::Approx((2e-3 - 1e-3) / 4.0).epsilon(1e-15));

    const auto factorized = representation(Representation::stetsko_tkachuk,
                                           DeformationParams::factorized(1e-3));
    CHECK(factorized.sym_x_p2 == 0.0);

    // with the correction gone the whole representation reduces to brau's
    const auto brau = representation(Representation::brau, DeformationParams::factorized(1e-3));
    CHECK(factorized.left_x_p2 == brau.left_x_p2);
    CHECK(factorized.proj_pp_x == brau.proj_pp_x);
    CHECK(factorized.momentum_c2 == brau.momentum_c2);
}
