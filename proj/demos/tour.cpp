// A guided tour: verify a scheme, act on the boundary, run the proximality
// and collapse experiments, and reduce a two-dimensional code to the line.

#include <iostream>

#include <autshift/autshift.hpp>

using namespace autshift;

int main() {
    std::cout << "-- marker schemes ----------------------------------------\n";
    MarkerScheme swap4(4,
                       {make_rule(word_from_string("000"), word_from_string("111"),
                                  {{word_from_string("2332"), word_from_string("3223")},
                                   {word_from_string("3223"), word_from_string("2332")}})},
                       "marker_swap_4");
    std::cout << "scheme " << swap4.label() << " verifies: "
              << (verify_scheme(swap4).ok ? "yes" : "no") << "\n";
    Code g = compile_scheme(swap4);
    BiConfiguration x = parse_biconfig("(0)* \"0002332111\" @0 (1)*", 4);
    std::cout << "  " << x.to_literal() << "  ->  " << apply_code(g, x).to_literal() << "\n";

    std::cout << "\n-- the boundary action -----------------------------------\n";
    Code g3 = build_proximal_code(2, 3);
    OmegaPoint f = parse_omega("\"0110\" (0)*", 2);
    OmegaPoint image = act_omega(g3, f);
    std::cout << "g_3 . " << f.to_literal() << " = " << image.to_literal() << "\n";
    std::cout << "r went from " << *r_value(f) << " to " << *r_value(image)
              << " (adds k = 3)\n";

    ProximalityReport prox = proximality_experiment(2, 1, 2, 3, 5, 6);
    std::cout << "proximality cells all within 2^-(m+k): " << (prox.ok ? "yes" : "no") << "\n";

    MeasureCollapseReport collapse = measure_collapse(default_measure(2), 12);
    std::cout << "two-atom measure collapsed below 2^-12 in " << collapse.stages.size()
              << " stages: " << (collapse.collapsed ? "yes" : "no") << "\n";

    std::cout << "\n-- reduction to the line ---------------------------------\n";
    std::cout << "min |u| over U_k: k=2.." << 6 << ":";
    for (int k = 2; k <= 6; ++k) std::cout << " " << min_norm_uk(2, k, k + 1).value;
    std::cout << "\n";

    ReductionVerdict shift_verdict = radical_reduction_check(shift_zd(3, 2, {1, -1}));
    std::cout << "sigma_(1,-1): " << shift_verdict.certificate << "\n";
    ReductionVerdict cross_verdict = radical_reduction_check(build_cross_swap(3, 2));
    std::cout << "cross_swap:   " << cross_verdict.certificate << "\n";
    return 0;
}
