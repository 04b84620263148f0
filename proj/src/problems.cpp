#include "smode/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace smode {

namespace {

using std::numbers::pi;
using Span = std::span<const double>;

double sq(double v) { return v * v; }
double cube(double v) { return v * v * v; }

CatalogEntry make_g01() {
    std::vector<double> lo(13, 0.0), hi(13, 1.0);
    hi[9] = hi[10] = hi[11] = 100.0;
    ConstrainedProblem p{"g01", Bounds(lo, hi), nullptr, {}, {}, -15.0, {}, 1};
    p.objective = [](Span x) {
        double a = 0.0, b = 0.0, c = 0.0;
        for (int i = 0; i < 4; ++i) {
            a += x[i];
            b += x[i] * x[i];
        }
        for (int i = 4; i < 13; ++i)
            c += x[i];
        return 5.0 * a - 5.0 * b - c;
    };
    p.inequalities = {
        [](Span x) { return 2 * x[0] + 2 * x[1] + x[9] + x[10] - 10; },
        [](Span x) { return 2 * x[0] + 2 * x[2] + x[9] + x[11] - 10; },
        [](Span x) { return 2 * x[1] + 2 * x[2] + x[10] + x[11] - 10; },
        [](Span x) { return -8 * x[0] + x[9]; },
        [](Span x) { return -8 * x[1] + x[10]; },
        [](Span x) { return -8 * x[2] + x[11]; },
        [](Span x) { return -2 * x[3] - x[4] + x[9]; },
        [](Span x) { return -2 * x[5] - x[6] + x[10]; },
        [](Span x) { return -2 * x[7] - x[8] + x[11]; },
    };
    p.optimum = DecisionVector{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 1};
    return {std::move(p), {13, ObjectiveType::Quadratic, 0.0003, 9, 0, 0, 6}};
}

CatalogEntry make_g02() {
    constexpr std::size_t n = 20;
    ConstrainedProblem p{"g02", Bounds(std::vector<double>(n, 0.0), std::vector<double>(n, 10.0)),
                         nullptr, {}, {}, -0.80361910412559, {}, 1};
    p.objective = [](Span x) {
        double sum_c4 = 0.0, prod_c2 = 1.0, weighted = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double c = std::cos(x[i]);
            sum_c4 += c * c * c * c;
            prod_c2 *= c * c;
            weighted += static_cast<double>(i + 1) * x[i] * x[i];
        }
        // the ratio is undefined at the origin corner of the box
        if (weighted == 0.0)
            return 0.0;
        return -std::abs(sum_c4 - 2.0 * prod_c2) / std::sqrt(weighted);
    };
    p.inequalities = {
        [](Span x) {
            double prod = 1.0;
            for (double v : x)
                prod *= v;
            return 0.75 - prod;
        },
        [](Span x) {
            double sum = 0.0;
            for (double v : x)
                sum += v;
            return sum - 7.5 * static_cast<double>(x.size());
        },
    };
    p.optimum = DecisionVector{
        3.16246061572185, 3.12833142812967, 3.09479212988791, 3.06145059523469,
        3.02792915885555, 2.99382606701730, 2.95866871765285, 2.92184227312450,
        0.49482511456933, 0.48835711005490, 0.48231642711865, 0.47664475092742,
        0.47129550835493, 0.46623099264167, 0.46142004984199, 0.45683664767217,
        0.45245876903267, 0.44826762241853, 0.44424700958760, 0.44038285956317};
    return {std::move(p), {20, ObjectiveType::Nonlinear, 99.9965, 1, 0, 1, 1}};
}

CatalogEntry make_g03() {
    constexpr std::size_t n = 10;
    ConstrainedProblem p{"g03", Bounds(std::vector<double>(n, 0.0), std::vector<double>(n, 1.0)),
                         nullptr, {}, {}, -1.00050010001000, {}, 1};
    p.objective = [](Span x) {
        const double scale = std::sqrt(static_cast<double>(x.size()));
        double prod = 1.0;
        for (double v : x)
            prod *= scale * v;
        return -prod;
    };
    p.equalities = {[](Span x) {
        double sum = 0.0;
        for (double v : x)
            sum += v * v;
        return sum - 1.0;
    }};
    p.optimum = DecisionVector(n, 0.31624357647283069);
    return {std::move(p), {10, ObjectiveType::Nonlinear, 0.0000, 0, 1, 0, 1}};
}

CatalogEntry make_g04() {
    ConstrainedProblem p{"g04", Bounds({78, 33, 27, 27, 27}, {102, 45, 45, 45, 45}),
                         nullptr, {}, {}, -30665.538671783317, {}, 1};
    p.objective = [](Span x) {
        return 5.3578547 * x[2] * x[2] + 0.8356891 * x[0] * x[4] + 37.293239 * x[0] - 40792.141;
    };
    auto u = [](Span x) {
        return 85.334407 + 0.0056858 * x[1] * x[4] + 0.0006262 * x[0] * x[3] -
               0.0022053 * x[2] * x[4];
    };
    auto w = [](Span x) {
        return 80.51249 + 0.0071317 * x[1] * x[4] + 0.0029955 * x[0] * x[1] +
               0.0021813 * x[2] * x[2];
    };
    auto z = [](Span x) {
        return 9.300961 + 0.0047026 * x[2] * x[4] + 0.0012547 * x[0] * x[2] +
               0.0019085 * x[2] * x[3];
    };
    p.inequalities = {
        [u](Span x) { return u(x) - 92.0; },
        [u](Span x) { return -u(x); },
        [w](Span x) { return w(x) - 110.0; },
        [w](Span x) { return -w(x) + 90.0; },
        [z](Span x) { return z(x) - 25.0; },
        [z](Span x) { return -z(x) + 20.0; },
    };
    p.optimum = DecisionVector{78, 33, 29.9952560256815985, 45, 36.7758129057882073};
    return {std::move(p), {5, ObjectiveType::Quadratic, 29.9356, 0, 0, 6, 2}};
}

CatalogEntry make_g05() {
    ConstrainedProblem p{"g05", Bounds({0, 0, -0.55, -0.55}, {1200, 1200, 0.55, 0.55}),
                         nullptr, {}, {}, 5126.4967140071, {}, 1};
    p.objective = [](Span x) {
        return 3.0 * x[0] + 0.000001 * cube(x[0]) + 2.0 * x[1] + (0.000002 / 3.0) * cube(x[1]);
    };
    p.inequalities = {
        [](Span x) { return -x[3] + x[2] - 0.55; },
        [](Span x) { return -x[2] + x[3] - 0.55; },
    };
    p.equalities = {
        [](Span x) {
            return 1000.0 * std::sin(-x[2] - 0.25) + 1000.0 * std::sin(-x[3] - 0.25) + 894.8 - x[0];
        },
        [](Span x) {
            return 1000.0 * std::sin(x[2] - 0.25) + 1000.0 * std::sin(x[2] - x[3] - 0.25) + 894.8 -
                   x[1];
        },
        [](Span x) {
            return 1000.0 * std::sin(x[3] - 0.25) + 1000.0 * std::sin(x[3] - x[2] - 0.25) + 1294.8;
        },
    };
    p.optimum = DecisionVector{679.945148297028709, 1026.06697600004691, 0.118876369094410433,
                               -0.396233485215178266};
    return {std::move(p), {4, ObjectiveType::Nonlinear, 0.0000, 2, 3, 0, 3}};
}

CatalogEntry make_g06() {
    ConstrainedProblem p{"g06", Bounds({13, 0}, {100, 100}), nullptr, {}, {}, -6961.81387558015, {},
                         1};
    p.objective = [](Span x) { return cube(x[0] - 10.0) + cube(x[1] - 20.0); };
    p.inequalities = {
        [](Span x) { return -sq(x[0] - 5.0) - sq(x[1] - 5.0) + 100.0; },
        [](Span x) { return sq(x[0] - 6.0) + sq(x[1] - 5.0) - 82.81; },
    };
    p.optimum = DecisionVector{14.09500000000000064, 0.8429607892154795668};
    return {std::move(p), {2, ObjectiveType::Nonlinear, 0.0064, 0, 0, 2, 2}};
}

CatalogEntry make_g07() {
    ConstrainedProblem p{"g07", Bounds(std::vector<double>(10, -10.0), std::vector<double>(10, 10.0)),
                         nullptr, {}, {}, 24.30620906818, {}, 1};
    p.objective = [](Span x) {
        return x[0] * x[0] + x[1] * x[1] + x[0] * x[1] - 14 * x[0] - 16 * x[1] + sq(x[2] - 10) +
               4 * sq(x[3] - 5) + sq(x[4] - 3) + 2 * sq(x[5] - 1) + 5 * x[6] * x[6] +
               7 * sq(x[7] - 11) + 2 * sq(x[8] - 10) + sq(x[9] - 7) + 45;
    };
    p.inequalities = {
        [](Span x) { return -105 + 4 * x[0] + 5 * x[1] - 3 * x[6] + 9 * x[7]; },
        [](Span x) { return 10 * x[0] - 8 * x[1] - 17 * x[6] + 2 * x[7]; },
        [](Span x) { return -8 * x[0] + 2 * x[1] + 5 * x[8] - 2 * x[9] - 12; },
        [](Span x) { return 3 * sq(x[0] - 2) + 4 * sq(x[1] - 3) + 2 * x[2] * x[2] - 7 * x[3] - 120; },
        [](Span x) { return 5 * x[0] * x[0] + 8 * x[1] + sq(x[2] - 6) - 2 * x[3] - 40; },
        [](Span x) { return x[0] * x[0] + 2 * sq(x[1] - 2) - 2 * x[0] * x[1] + 14 * x[4] - 6 * x[5]; },
        [](Span x) { return 0.5 * sq(x[0] - 8) + 2 * sq(x[1] - 4) + 3 * x[4] * x[4] - x[5] - 30; },
        [](Span x) { return -3 * x[0] + 6 * x[1] + 12 * sq(x[8] - 8) - 7 * x[9]; },
    };
    // x8, x9 carry one extra digit moved inward so the active g1/g3 do not
    // round to a positive value in double arithmetic.
    p.optimum = DecisionVector{2.17199634142692, 2.3636830416034,  8.77392573913157,
                               5.09598443745173, 0.990654756560493, 1.43057392853463,
                               1.32164415364306, 9.82872576524494,  8.28009158873559,
                               8.3759266477347};
    return {std::move(p), {10, ObjectiveType::Quadratic, 0.0003, 3, 0, 5, 6}};
}

double g08_objective(Span x) {
    const double s1 = std::sin(2.0 * pi * x[0]);
    const double s2 = std::sin(2.0 * pi * x[1]);
    if (x[0] == 0.0) {
        // removable singularity: sin^3(2*pi*x1) / x1^3 -> (2*pi)^3
        const double k = cube(2.0 * pi);
        return x[1] == 0.0 ? -k * 2.0 * pi : -k * s2 / x[1];
    }
    return -cube(s1) * s2 / (cube(x[0]) * (x[0] + x[1]));
}

CatalogEntry make_g08() {
    ConstrainedProblem p{"g08", Bounds({0, 0}, {10, 10}), g08_objective, {}, {}, -0.0958250414180359,
                         {}, 1};
    p.inequalities = {
        [](Span x) { return x[0] * x[0] - x[1] + 1.0; },
        [](Span x) { return 1.0 - x[0] + sq(x[1] - 4.0); },
    };
    p.optimum = DecisionVector{1.22797135260752599, 4.24537336612274885};
    return {std::move(p), {2, ObjectiveType::Nonlinear, 0.8640, 0, 0, 2, 0}};
}

CatalogEntry make_g09() {
    ConstrainedProblem p{"g09", Bounds(std::vector<double>(7, -10.0), std::vector<double>(7, 10.0)),
                         nullptr, {}, {}, 680.630057374402, {}, 1};
    p.objective = [](Span x) {
        return sq(x[0] - 10) + 5 * sq(x[1] - 12) + std::pow(x[2], 4) + 3 * sq(x[3] - 11) +
               10 * std::pow(x[4], 6) + 7 * x[5] * x[5] + std::pow(x[6], 4) - 4 * x[5] * x[6] -
               10 * x[5] - 8 * x[6];
    };
    p.inequalities = {
        [](Span x) { return -127 + 2 * x[0] * x[0] + 3 * std::pow(x[1], 4) + x[2] + 4 * x[3] * x[3] + 5 * x[4]; },
        [](Span x) { return -282 + 7 * x[0] + 3 * x[1] + 10 * x[2] * x[2] + x[3] - x[4]; },
        [](Span x) { return -196 + 23 * x[0] + x[1] * x[1] + 6 * x[5] * x[5] - 8 * x[6]; },
        [](Span x) {
            return 4 * x[0] * x[0] + x[1] * x[1] - 3 * x[0] * x[1] + 2 * x[2] * x[2] + 5 * x[5] - 11 * x[6];
        },
    };
    p.optimum = DecisionVector{2.33049935147405174,  1.95137236847114592, -0.477541399510615805,
                               4.36572624923625874,  -0.624486959100388983, 1.03813099410962173,
                               1.5942266780671519};
    return {std::move(p), {7, ObjectiveType::Nonlinear, 0.5256, 0, 0, 4, 2}};
}

CatalogEntry make_g10() {
    ConstrainedProblem p{"g10",
                         Bounds({100, 1000, 1000, 10, 10, 10, 10, 10},
                                {10000, 10000, 10000, 1000, 1000, 1000, 1000, 1000}),
                         nullptr, {}, {}, 7049.24802052867, {}, 1};
    p.objective = [](Span x) { return x[0] + x[1] + x[2]; };
    p.inequalities = {
        [](Span x) { return -1 + 0.0025 * (x[3] + x[5]); },
        [](Span x) { return -1 + 0.0025 * (x[4] + x[6] - x[3]); },
        [](Span x) { return -1 + 0.01 * (x[7] - x[4]); },
        [](Span x) { return -x[0] * x[5] + 833.33252 * x[3] + 100 * x[0] - 83333.333; },
        [](Span x) { return -x[1] * x[6] + 1250 * x[4] + x[1] * x[3] - 1250 * x[3]; },
        [](Span x) { return -x[2] * x[7] + 1250000 + x[2] * x[4] - 2500 * x[4]; },
    };
    p.optimum = DecisionVector{579.306685017979589, 1359.97067807935605, 5109.97065743133317,
                               182.01769963061534,  295.601173702746792, 217.982300369384632,
                               286.41652592786852,  395.601173702746735};
    return {std::move(p), {8, ObjectiveType::Linear, 0.0005, 3, 0, 3, 3}};
}

CatalogEntry make_g11() {
    ConstrainedProblem p{"g11", Bounds({-1, -1}, {1, 1}), nullptr, {}, {}, 0.7499, {}, 1};
    p.objective = [](Span x) { return x[0] * x[0] + sq(x[1] - 1.0); };
    p.equalities = {[](Span x) { return x[1] - x[0] * x[0]; }};
    p.optimum = DecisionVector{-0.707036070037170616, 0.500000004333606807};
    return {std::move(p), {2, ObjectiveType::Quadratic, 0.0000, 0, 1, 0, 1}};
}

CatalogEntry make_g12() {
    ConstrainedProblem p{"g12", Bounds({0, 0, 0}, {10, 10, 10}), nullptr, {}, {}, -1.0, {}, 729};
    p.objective = [](Span x) {
        return -(100.0 - sq(x[0] - 5) - sq(x[1] - 5) - sq(x[2] - 5)) / 100.0;
    };
    // Disjunction over the 9^3 discs centred at integer points in {1..9}^3:
    // the minimum over centres is separable, so each coordinate takes its
    // nearest admissible integer.
    p.inequalities = {[](Span x) {
        double sum = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            const double centre = std::clamp(std::round(x[i]), 1.0, 9.0);
            sum += sq(x[i] - centre);
        }
        return sum - 0.0625;
    }};
    p.optimum = DecisionVector{5, 5, 5};
    return {std::move(p), {3, ObjectiveType::Quadratic, 0.0197, 0, 0, 729, 0}};
}

CatalogEntry make_g13() {
    ConstrainedProblem p{"g13", Bounds({-2.3, -2.3, -3.2, -3.2, -3.2}, {2.3, 2.3, 3.2, 3.2, 3.2}),
                         nullptr, {}, {}, 0.053941514041898, {}, 1};
    p.objective = [](Span x) { return std::exp(x[0] * x[1] * x[2] * x[3] * x[4]); };
    p.equalities = {
        [](Span x) {
            double sum = 0.0;
            for (double v : x)
                sum += v * v;
            return sum - 10.0;
        },
        [](Span x) { return x[1] * x[2] - 5.0 * x[3] * x[4]; },
        [](Span x) { return cube(x[0]) + cube(x[1]) + 1.0; },
    };
    // last digit of x5 moved inward: h2 otherwise lands 3e-15 past delta
    p.optimum = DecisionVector{-1.71714224003, 1.59572124049468, 1.8272502406271,
                               -0.763659881912867, -0.76365986736497};
    return {std::move(p), {5, ObjectiveType::Nonlinear, 0.0000, 0, 3, 0, 3}};
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    out.reserve(13);
    out.push_back(make_g01());
    out.push_back(make_g02());
    out.push_back(make_g03());
    out.push_back(make_g04());
    out.push_back(make_g05());
    out.push_back(make_g06());
    out.push_back(make_g07());
    out.push_back(make_g08());
    out.push_back(make_g09());
    out.push_back(make_g10());
    out.push_back(make_g11());
    out.push_back(make_g12());
    out.push_back(make_g13());
    return out;
}

int problem_number(std::string_view id) {
    if (id.size() != 3 || id[0] != 'g' || id[1] < '0' || id[1] > '9' || id[2] < '0' || id[2] > '9')
        return -1;
    return (id[1] - '0') * 10 + (id[2] - '0');
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

} // namespace

std::string_view to_string(ObjectiveType type) noexcept {
    switch (type) {
    case ObjectiveType::Linear: return "linear";
    case ObjectiveType::Quadratic: return "quadratic";
    case ObjectiveType::Nonlinear: return "nonlinear";
    }
    return "unknown";
}

RawEvaluation ConstrainedProblem::evaluate_raw(std::span<const double> x) const {
    if (x.size() != dimension())
        throw std::invalid_argument(id + ": expected " + std::to_string(dimension()) +
                                    " variables, got " + std::to_string(x.size()));
    RawEvaluation out;
    out.f = objective(x);
    out.g.reserve(inequalities.size());
    for (const auto& gi : inequalities)
        out.g.push_back(gi(x));
    out.h.reserve(equalities.size());
    for (const auto& hj : equalities)
        out.h.push_back(hj(x));

    const auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(out.f) || !std::all_of(out.g.begin(), out.g.end(), finite) ||
        !std::all_of(out.h.begin(), out.h.end(), finite))
        throw std::domain_error(id + ": non-finite evaluation");
    return out;
}

const std::vector<CatalogEntry>& problem_catalog() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

const CatalogEntry& find_problem(std::string_view id) {
    for (const auto& entry : problem_catalog()) {
        if (entry.problem.id == id)
            return entry;
    }
    throw std::out_of_range("unknown problem id '" + std::string(id) + "'");
}

std::vector<std::string> parse_problem_list(std::string_view spec) {
    std::vector<std::string> out;
    auto push = [&](int number) {
        const auto& entry = problem_catalog().at(static_cast<std::size_t>(number - 1));
        if (std::find(out.begin(), out.end(), entry.problem.id) == out.end())
            out.push_back(entry.problem.id);
    };
    const int count = static_cast<int>(problem_catalog().size());
    auto checked = [&](std::string_view id) {
        const int number = problem_number(id);
        if (number < 1 || number > count)
            throw std::invalid_argument("unknown problem id '" + std::string(id) + "'");
        return number;
    };

    spec = trim(spec);
    if (spec == "all") {
        for (int i = 1; i <= count; ++i)
            push(i);
        return out;
    }
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        const std::string_view item = trim(spec.substr(0, comma));
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        if (item.empty())
            continue;
        if (const auto dots = item.find(".."); dots != std::string_view::npos) {
            const int first = checked(trim(item.substr(0, dots)));
            const int last = checked(trim(item.substr(dots + 2)));
            if (first > last)
                throw std::invalid_argument("empty problem range '" + std::string(item) + "'");
            for (int i = first; i <= last; ++i)
                push(i);
        } else {
            push(checked(item));
        }
    }
    return out;
}

} // namespace smode
