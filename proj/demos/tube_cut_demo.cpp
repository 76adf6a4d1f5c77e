// Walkthrough of the main pipeline: reduce a hyperplane to normal form,
// compute the exact cut-volume polynomial of a sphere-tube body, evaluate
// the two side volumes, and cross-check against quadrature and Monte Carlo.

#include <iostream>

#include "cutvol/cutvol.hpp"
#include "cutvol/json_io.hpp"

int main() {
    using namespace cutvol;

    const TubeSpec spec(2, 1, Rational(1, 2));
    std::cout << "body: tube of radius " << to_fraction_string(spec.epsilon)
              << " around the unit sphere S^" << (spec.sphere_factor_dim() - 1)
              << " in R^" << spec.ambient_dim() << "\n\n";

    const BiPoly dvdb = tube_dvdb(spec);
    const BiPoly cut = tube_cut_poly(spec);
    std::cout << "dV/db as JSON:\n  " << to_json(dvdb).dump() << "\n";
    std::cout << "cut polynomial P (degree " << cut.total_degree() << "):\n  "
              << to_json(cut).dump() << "\n\n";

    // A general-position hyperplane 3 x_2 + 4 x_3 = 1.25 y_1 - 0.625.
    const Hyperplane h{{0.0, 3.0, 4.0, 0.0, 0.0}, {-1.25}, -0.625};
    const NormalForm nf = normal_form(h);
    std::cout << "hyperplane reduces to a = " << nf.a << ", b = " << nf.b
              << (in_lacuna(spec, nf) ? " (inside the lacuna)\n" : " (outside)\n");

    const TwoValuedVolume tv = tube_volumes(spec, h, 1e-10);
    std::cout << "side volumes: " << tv.bigger << " / " << tv.smaller
              << "  (total " << tv.total << ")\n";

    const double numeric = quad_dvdb(spec, nf.a, nf.b, 1e-11);
    std::cout << "dV/db exact " << dvdb(nf.a, nf.b) << " vs quadrature " << numeric << "\n";

    const McEstimate mc =
        mc_cut_volume(make_tube_body(spec), hyperplane_functional(h), 2'000'000, 42);
    std::cout << "Monte Carlo sides: " << mc.side_minus << " / " << mc.side_plus
              << "  (stderr " << mc.stderr_est << ")\n\n";

    std::cout << "classical: 3-ball cap polynomial " << to_json(ball_cap_poly(3)).dump()
              << "\n";
    const QuadricCut parab = paraboloid_cut(4, std::vector<double>{0.0, 0.0, 0.0}, 1.0);
    std::cout << "classical: paraboloid section in R^4 has volume " << parab.volume
              << " with certificate \"" << to_string(parab.certificate) << "\"\n";
    return 0;
}
