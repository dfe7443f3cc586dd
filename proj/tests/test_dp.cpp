#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pentaloss/policy_dp.hpp"

using namespace pentaloss;

namespace {

const PentagonCode& code() {
    static const PentagonCode c = build_pentagon_code();
    return c;
}

const NonPreRecurrence& recurrence() {
    static const NonPreRecurrence r = nonpre_recurrence(code());
    return r;
}

}  // namespace

TEST_CASE("optimal failure polynomial") {
    const auto& z = recurrence().for_basis(Basis::Z);
    // 6p^2 - 8p^3 + 3p^4, exact.
    CHECK(z.failure == LossPolynomial({0, 0, 6, -8, 3}));
    CHECK(z.failure(0.0) == 0.0);
    CHECK(z.failure(1.0) == doctest::Approx(1.0));
    CHECK(z.tie_states.empty());  // a uniformly best probe exists everywhere
    CHECK(z.failure.eval(Rational(1, 20)) == Rational(2243, 160000));  // 0.01401875
}

TEST_CASE("per-basis symmetry, verified not assumed") {
    const auto& r = recurrence();
    CHECK(r.symmetric);
    CHECK(r.for_basis(Basis::X).failure == r.for_basis(Basis::Z).failure);
    CHECK(r.for_basis(Basis::Y).failure == r.for_basis(Basis::Z).failure);
    auto v = r.step({0.1, 0.1, 0.1});
    CHECK(v[0] == doctest::Approx(v[1]));
    CHECK(v[1] == doctest::Approx(v[2]));
}

TEST_CASE("policy tree evaluation matches the dp polynomial") {
    const auto& z = recurrence().for_basis(Basis::Z);
    auto poly_from_tree = policy_failure(z.policy);
    CHECK(poly_from_tree == z.failure);
}

TEST_CASE("every success leaf carries an exact certificate") {
    for (Basis b : {Basis::X, Basis::Y, Basis::Z}) {
        const auto& res = recurrence().for_basis(b);
        int successes = 0;
        for (const auto& n : res.policy.nodes) {
            if (!n.is_leaf || n.leaf != LeafKind::Success) continue;
            ++successes;
            REQUIRE(n.certificate.has_value());
            CHECK(n.certificate->certifies == b);
            // Multiply the certificate out and compare with the logical.
            PauliOperator prod(5);
            for (const auto& pr : n.certificate->probes_used) {
                prod = multiply(prod, PauliOperator::single(5, pr.qubit, pr.basis));
            }
            for (std::size_t gi : n.certificate->stabilizer_indices) {
                prod = multiply(prod, code().code_stabilizers().generators()[gi]);
            }
            PauliOperator expect = code().logical(b);
            expect.set_phase_quarter(expect.phase_quarter() + (n.certificate->sign == 1 ? 0 : 2));
            CHECK(prod == expect);
        }
        CHECK(successes >= 1);
    }
}

TEST_CASE("dp policy is clean under validation") {
    const auto& z = recurrence().for_basis(Basis::Z);
    auto v = validate_policy(z.policy, code(), {Basis::Z});
    CHECK(v.clean());
    for (const auto& l : v.success_leaves) {
        CHECK(std::count(l.certifiable.begin(), l.certifiable.end(), Basis::Z) == 1);
    }
}

TEST_CASE("dominance over the published tree and any handwritten policy") {
    const auto& z = recurrence().for_basis(Basis::Z);
    auto tree_fail = policy_failure(published_tree());
    CHECK(tree_fail.dominates(z.failure));  // optimal failure is lower everywhere
    for (int k = 0; k <= 1000; ++k) {
        double p = k / 1000.0;
        CHECK(z.failure(p) <= tree_fail(p) + 1e-12);
    }
}

TEST_CASE("failure polynomials are monotone on the unit grid") {
    for (Basis b : {Basis::X, Basis::Y, Basis::Z}) {
        const auto& f = recurrence().for_basis(b).failure;
        double prev = 0.0;
        for (int k = 0; k <= 1000; ++k) {
            double v = f(k / 1000.0);
            CHECK(v >= prev - 1e-12);
            prev = v;
        }
    }
}

TEST_CASE("threshold lies at (5 - sqrt(13)) / 6") {
    auto t = find_threshold(recurrence().scalar_fn());
    REQUIRE(t.found);
    // The exact fixed point of 6p^2 - 8p^3 + 3p^4 = p is (5 - sqrt(13)) / 6,
    // bracketing the published "about 23%".
    CHECK(std::abs(t.value - (5.0 - std::sqrt(13.0)) / 6.0) <= 1e-9);
    CHECK(t.value >= 0.20);
    CHECK(t.value <= 0.26);
}

TEST_CASE("level recursion reproduces the non-preannounced table") {
    struct Row { double p; int n; double expect; };
    // Values pinned from exact evaluation of the recursion.
    const Row rows[] = {
        {0.05, 1, 1.401875e-2}, {0.10, 1, 5.23e-2},      {0.15, 1, 1.09518749e-1},
        {0.05, 2, 1.157228e-3}, {0.10, 2, 1.528974e-2},  {0.15, 2, 6.188888e-2},
        {0.05, 3, 8.022663e-6}, {0.10, 3, 1.374226e-3},  {0.15, 3, 2.112902e-2},
        {0.05, 4, 3.861746e-10}, {0.10, 4, 1.131023e-5}, {0.15, 4, 2.603749e-3},
        {0.05, 5, 8.947848e-19}, {0.10, 5, 7.675161e-10}, {0.15, 5, 4.053597e-5},
    };
    for (const auto& r : rows) {
        double got = recurrence().iterate(r.p, r.n)[static_cast<int>(Basis::Z)];
        CHECK_MESSAGE(got == doctest::Approx(r.expect).epsilon(1e-5), "p=", r.p, " N=", r.n);
        // The scalar composition agrees with the vector map.
        double scalar = iterate_levels(recurrence().scalar_fn(), r.p, r.n);
        CHECK(scalar == doctest::Approx(got).epsilon(1e-9));
    }
}

TEST_CASE("located-loss variant reproduces the preannounced map exactly") {
    for (Basis b : {Basis::X, Basis::Y, Basis::Z}) {
        CHECK(located_loss_polynomial(code(), b) == pre_failure_polynomial());
    }
}

TEST_CASE("asymptotics of the non-preannounced failure") {
    auto [k, c] = recurrence().scalar().lowest_term();
    CHECK(k == 2);
    CHECK(c == 6);
    auto fit = asymptotic_coefficient(recurrence().scalar_fn());
    REQUIRE_FALSE(fit.degenerate);
    CHECK(std::abs(fit.exponent - 2.0) <= 0.02);
}

TEST_CASE("relabeling invariance of the optimal failure polynomial") {
    for (int offset : {1, 2, 3, 4}) {
        auto rot = code().rotated(offset);
        auto res = optimal_policy(rot, Basis::Z);
        CHECK(res.failure == recurrence().for_basis(Basis::Z).failure);
    }
}

TEST_CASE("dominance over a handwritten all-Z policy") {
    // Probe every qubit in Z and succeed only when all five click: a valid
    // but wasteful plan certifying the weight-5 representative.
    MeasurementPolicy p;
    p.target = Basis::Z;
    PolicyNode success{true, LeafKind::Success, {}, -1, -1, {}};
    PolicyNode failure{true, LeafKind::Failure, {}, -1, -1, {}};
    p.nodes.push_back({});  // root placeholder
    p.nodes.push_back(success);
    p.nodes.push_back(failure);
    std::int32_t next = 1;
    for (int q = 4; q >= 1; --q) {
        PolicyNode n;
        n.probe = {static_cast<std::size_t>(q), Basis::Z};
        n.on_click = next;
        n.on_lost = 2;
        p.nodes.push_back(n);
        next = static_cast<std::int32_t>(p.nodes.size() - 1);
    }
    PolicyNode root;
    root.probe = {0, Basis::Z};
    root.on_click = next;
    root.on_lost = 2;
    p.nodes[0] = root;

    auto v = validate_policy(p, code(), {Basis::Z});
    // Sound SUCCESS leaves, but giving up after any single loss is flagged
    // as premature: switching to another representative is still possible.
    for (const auto& a : v.anomalies) {
        CHECK(a.kind == PolicyAnomaly::Kind::PrematureFailure);
    }
    REQUIRE(v.success_leaves.size() == 1);
    CHECK(v.success_leaves[0].certifiable == std::vector<Basis>{Basis::Z});
    auto fail = policy_failure(p);
    CHECK(fail.dominates(recurrence().for_basis(Basis::Z).failure));
}
