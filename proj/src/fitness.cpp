#include "smode/fitness.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace smode {

std::string_view to_string(Helper helper) noexcept {
    switch (helper) {
    case Helper::F1: return "F1";
    case Helper::F2: return "F2";
    case Helper::F3: return "F3";
    case Helper::F4: return "F4";
    case Helper::F5: return "F5";
    case Helper::F6: return "F6";
    }
    return "?";
}

void HelperSet::validate() const {
    if (active.empty())
        throw std::invalid_argument("helper set must not be empty");
    for (std::size_t i = 0; i < active.size(); ++i) {
        if (std::find(active.begin() + static_cast<std::ptrdiff_t>(i) + 1, active.end(), active[i]) !=
            active.end())
            throw std::invalid_argument("helper set contains " + std::string(to_string(active[i])) +
                                        " twice");
    }
    if (!(c4 >= 0.0) || !(c5 >= 0.0) || !(c6 >= 0.0) || !(delta >= 0.0))
        throw std::invalid_argument("penalty coefficients and delta must be non-negative");
}

HelperSet HelperSet::standard(int count) {
    HelperSet out;
    switch (count) {
    case 2: out.active = {Helper::F1, Helper::F2}; break;
    case 4: out.active = {Helper::F1, Helper::F2, Helper::F3, Helper::F4}; break;
    case 6:
        out.active = {Helper::F1, Helper::F2, Helper::F3, Helper::F4, Helper::F5, Helper::F6};
        break;
    default: throw std::invalid_argument("helper mode must be 2, 4 or 6");
    }
    return out;
}

HelperSet HelperSet::parse(std::string_view text) {
    if (text == "2" || text == "4" || text == "6")
        return standard(text[0] - '0');
    if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("helper mode must be 2, 4 or 6, or a list such as F1,F3");
    HelperSet out;
    out.active.clear();
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find_first_of(",+", pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view item = text.substr(pos, end - pos);
        pos = end + 1;
        if (item.size() != 2 || std::toupper(static_cast<unsigned char>(item[0])) != 'F' ||
            item[1] < '1' || item[1] > '6')
            throw std::invalid_argument("invalid helper '" + std::string(item) + "'");
        out.active.push_back(static_cast<Helper>(item[1] - '1'));
    }
    out.validate();
    return out;
}

std::string HelperSet::label() const {
    for (int count : {2, 4, 6}) {
        if (active == standard(count).active)
            return std::to_string(count);
    }
    std::string out;
    for (Helper h : active) {
        if (!out.empty())
            out += '+';
        out += to_string(h);
    }
    return out;
}

double violation(std::span<const double> g, std::span<const double> h, double delta) {
    double v = 0.0;
    for (double gi : g)
        v += std::max(0.0, gi);
    for (double hj : h)
        v += std::max(0.0, std::abs(hj) - delta);
    return v;
}

EvaluatedIndividual assess(const ConstrainedProblem& problem, DecisionVector x, double delta) {
    const RawEvaluation raw = problem.evaluate_raw(x);
    EvaluatedIndividual out;
    out.x = std::move(x);
    out.f = raw.f;
    out.v = violation(raw.g, raw.h, delta);
    return out;
}

double worst_feasible_reference(std::span<const EvaluatedIndividual> population) {
    bool any = false;
    double worst = 0.0;
    for (const auto& ind : population) {
        if (!ind.feasible())
            continue;
        worst = any ? std::max(worst, ind.f) : ind.f;
        any = true;
    }
    return worst;
}

ObjectiveVector objective_vector(double f, double v, double fsharp, const HelperSet& helpers) {
    ObjectiveVector out;
    out.reserve(helpers.active.size());
    for (Helper h : helpers.active) {
        switch (h) {
        case Helper::F1: out.push_back(f); break;
        case Helper::F2: out.push_back(v); break;
        case Helper::F3: out.push_back(v == 0.0 ? f : fsharp + v); break;
        case Helper::F4: out.push_back(f + helpers.c4 * v); break;
        case Helper::F5: out.push_back(f + helpers.c5 * v); break;
        case Helper::F6: out.push_back(f + helpers.c6 * v); break;
        }
    }
    return out;
}

bool dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominates: objective vectors differ in length");
    bool strictly = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i])
            return false;
        if (a[i] < b[i])
            strictly = true;
    }
    return strictly;
}

bool feasible_rule_less(const EvaluatedIndividual& a, const EvaluatedIndividual& b) noexcept {
    const bool fa = a.feasible();
    const bool fb = b.feasible();
    if (fa && fb)
        return a.f < b.f;
    if (fa != fb)
        return fa;
    return a.v < b.v;
}

} // namespace smode
