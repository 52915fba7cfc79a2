#include "formulas.hpp"

#include <cassert>

namespace antiramsey {

namespace {

std::string range_from(int lo) { return "n >= " + std::to_string(lo); }

long long binom2(long long x) { return x * (x - 1) / 2; }

}  // namespace

FormulaValue star_formula(int n, int k) {
    if (k < 2 || n < k + 1)
        throw std::invalid_argument("star_formula: need k >= 2 and n >= k+1");
    long long value = static_cast<long long>(k - 2) * n / 2;
    value += (k - 2) / (n - k + 2);
    value += 2;
    value += static_cast<long long>(n % 2) * (k % 2) * (((2 * k - 4) / (n - k + 2)) % 2);
    return {value, true, "k >= 2, " + range_from(k + 1)};
}

FormulaValue path_formula(int n, int k) {
    if (k < 2) throw std::invalid_argument("path_formula: need k >= 2");
    const long long h = k / 2;
    // (h-1)(n - h/2): the product (h-1)(2n-h) is always even
    long long value = (h - 1) * (2 * n - h) / 2 + 2 + k % 2;
    return {value, true,
            "k >= 2, proven for large enough n (threshold n >= 5k/4 + c with c unspecified)"};
}

FormulaValue cycle_lower_bound(int n, int k) {
    if (k < 3 || n < k) throw std::invalid_argument("cycle_lower_bound: need n >= k >= 3");
    const long long q = n / (k - 1);
    const long long r = n % (k - 1);
    long long value = binom2(k - 1) * q + (n + k - 2) / (k - 1) + binom2(r);
    return {value, false, "lower bound for n >= k >= 3; tight for k = 3, 4"};
}

FormulaValue matching_formula(int n, int t) {
    if (t < 2 || n < 2 * t + 1)
        throw std::invalid_argument("matching_formula: need t >= 2 and n >= 2t+1");
    const long long low = static_cast<long long>(t - 2) * (2 * t - 3) + 2;
    // (t-2)(n - (t-1)/2) + 2 evaluated as (t-2)(2n-t+1)/2 + 2; the product is even
    const long long high = static_cast<long long>(t - 2) * (2 * n - t + 1) / 2 + 2;
    if (2 * n == 5 * t - 7 && low != high)
        throw std::logic_error("matching_formula: branch disagreement at the split point");
    const long long value = (2 * n <= 5 * t - 7) ? low : high;
    return {value, true, "t >= 2, " + range_from(2 * t + 1)};
}

FormulaValue perfect_matching_formula(int t) {
    if (t < 3) throw std::invalid_argument("perfect_matching_formula: need t >= 3");
    // (t-2)(3t+1) is always even
    long long value = (t <= 6) ? static_cast<long long>(t - 2) * (3 * t + 1) / 2 + 2
                               : static_cast<long long>(t - 2) * (2 * t - 3) + 3;
    return {value, true, "t >= 3, n = 2t"};
}

FormulaValue ar_formula(const PatternGraph& p, int n) {
    if (n < p.num_vertices)
        throw std::invalid_argument("ar_formula: host order below pattern order");
    const std::string& g = p.name;
    const long long half = n / 2;
    if (g == "P2") return {1, true, range_from(2)};
    if (g == "P3") return {2, true, range_from(3)};
    if (g == "2P2") return {n == 4 ? 4 : 2, true, range_from(4)};
    if (g == "P4") return {n == 4 ? 4 : 3, true, range_from(4)};
    if (g == "P3+P2") return {3, true, range_from(5)};
    if (g == "K13") return {half + 2, true, range_from(4)};
    if (g == "Y") return {std::max<long long>(half + 2, 5), true, range_from(5)};
    if (g == "K13+P2") return {std::max<long long>(half + 2, 6), true, range_from(6)};
    if (g == "C3") return {n, true, range_from(3)};
    if (g == "Q") return {n, true, range_from(4)};
    if (g == "3P2") return {n + 1, true, range_from(6)};
    if (g == "P3+2P2") return {n + 1, true, range_from(7)};
    if (g == "C3+P2") return {std::max<long long>(n + 1, 7), true, range_from(5)};
    if (g == "P4+P2") return {n + 1, true, range_from(6)};
    if (g == "P5") return {n + 1, true, range_from(5)};
    if (g == "2P3") return {std::max<long long>(n + 1, 8), true, range_from(6)};
    if (g == "K14") return {star_formula(n, 4).value, true, range_from(5)};
    if (g == "C4") return {4LL * n / 3, true, range_from(4)};
    if (g == "4P2") {
        if (n == 8) return {perfect_matching_formula(4).value, true, "n = 8"};
        return {matching_formula(n, 4).value, true, range_from(9)};
    }
    throw unsupported_domain("ar_formula: no proven value for pattern " + g);
}

bool CrossCheckReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

CrossCheckReport cross_checks() {
    CrossCheckReport report;
    auto check = [&report](std::string identity, auto&& body) {
        CrossCheckReport::Entry entry;
        entry.identity = std::move(identity);
        entry.pass = true;
        body(entry);
        report.entries.push_back(std::move(entry));
    };
    auto fail_at = [](CrossCheckReport::Entry& e, int n, long long lhs, long long rhs) {
        e.pass = false;
        e.detail = "first failure at n = " + std::to_string(n) + ": " + std::to_string(lhs) +
                   " != " + std::to_string(rhs);
    };

    check("star_formula(n,3) == floor(n/2)+2 for 4 <= n <= 200", [&](auto& e) {
        for (int n = 4; n <= 200 && e.pass; ++n)
            if (long long v = star_formula(n, 3).value; v != n / 2 + 2) fail_at(e, n, v, n / 2 + 2);
    });
    check("star_formula(n,4) == n+2 for 5 <= n <= 200", [&](auto& e) {
        for (int n = 5; n <= 200 && e.pass; ++n)
            if (long long v = star_formula(n, 4).value; v != n + 2) fail_at(e, n, v, n + 2);
    });
    check("path_formula(n,3) == 3 for 4 <= n <= 200", [&](auto& e) {
        for (int n = 4; n <= 200 && e.pass; ++n)
            if (long long v = path_formula(n, 3).value; v != 3) fail_at(e, n, v, 3);
    });
    check("path_formula(n,4) == n+1 for 4 <= n <= 200", [&](auto& e) {
        for (int n = 4; n <= 200 && e.pass; ++n)
            if (long long v = path_formula(n, 4).value; v != n + 1) fail_at(e, n, v, n + 1);
    });
    check("matching_formula(n,3) == n+1 for 7 <= n <= 200", [&](auto& e) {
        for (int n = 7; n <= 200 && e.pass; ++n)
            if (long long v = matching_formula(n, 3).value; v != n + 1) fail_at(e, n, v, n + 1);
    });
    check("cycle_lower_bound(n,4) == floor(4n/3) for 4 <= n <= 200", [&](auto& e) {
        for (int n = 4; n <= 200 && e.pass; ++n)
            if (long long v = cycle_lower_bound(n, 4).value; v != 4LL * n / 3)
                fail_at(e, n, v, 4LL * n / 3);
    });
    check("perfect_matching_formula gives 7 at t=3 and 15 at t=4", [&](auto& e) {
        if (perfect_matching_formula(3).value != 7 || perfect_matching_formula(4).value != 15) {
            e.pass = false;
            e.detail = "t=3 gives " + std::to_string(perfect_matching_formula(3).value) +
                       ", t=4 gives " + std::to_string(perfect_matching_formula(4).value);
        }
    });
    check("perfect and near-perfect matching values glue to the table rows for t=3,4", [&](auto& e) {
        // 3P2 row is n+1, 4P2 row is 2n-1; n = 2t and n = 2t+1 come from different formulas
        struct Case {
            int t;
            long long at_2t, at_2t1;
        } cases[] = {{3, 2 * 3 + 1, 2 * 3 + 2}, {4, 2LL * (2 * 4) - 1, 2LL * (2 * 4 + 1) - 1}};
        for (const auto& c : cases) {
            if (perfect_matching_formula(c.t).value != c.at_2t ||
                matching_formula(2 * c.t + 1, c.t).value != c.at_2t1) {
                e.pass = false;
                e.detail = "t = " + std::to_string(c.t);
                break;
            }
        }
    });
    check("matching_formula branches agree at integral split points up to t = 49", [&](auto& e) {
        for (int t = 9; t <= 49 && e.pass; t += 2) {
            int n = (5 * t - 7) / 2;  // integral for odd t, inside the domain for t >= 9
            long long low = static_cast<long long>(t - 2) * (2 * t - 3) + 2;
            long long high = static_cast<long long>(t - 2) * (2 * n - t + 1) / 2 + 2;
            if (low != high) fail_at(e, n, low, high);
        }
    });
    return report;
}

}  // namespace antiramsey
