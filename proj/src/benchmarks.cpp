#include "woi/benchmarks.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace woi {

namespace {

std::atomic<std::uint64_t> g_evaluations{0};

void check_domain(const TestFunction& fn, std::span<const double> x)
{
    if (static_cast<int>(x.size()) != fn.n)
        throw std::invalid_argument("benchmark: design vector has dimension "
                                    + std::to_string(x.size()) + ", expected "
                                    + std::to_string(fn.n));
    for (int i = 0; i < fn.n; ++i) {
        if (x[i] < fn.lower[i] || x[i] > fn.upper[i])
            throw std::logic_error("benchmark: design vector leaves the domain box at coordinate "
                                   + std::to_string(i) + " (operators must clip before evaluation)");
    }
}

double zdt_g(std::span<const double> x)
{
    double sum = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        sum += x[i];
    return 1.0 + 9.0 * sum / (static_cast<double>(x.size()) - 1.0);
}

} // namespace

const char* to_string(TestFunctionKind kind)
{
    switch (kind) {
    case TestFunctionKind::ZDT1: return "ZDT1";
    case TestFunctionKind::ZDT2: return "ZDT2";
    case TestFunctionKind::ZDT3: return "ZDT3";
    case TestFunctionKind::SCH1: return "SCH1";
    }
    throw std::logic_error("benchmark: unknown function kind");
}

TestFunctionKind test_function_kind_from_string(const std::string& name)
{
    if (name == "ZDT1") return TestFunctionKind::ZDT1;
    if (name == "ZDT2") return TestFunctionKind::ZDT2;
    if (name == "ZDT3") return TestFunctionKind::ZDT3;
    if (name == "SCH1") return TestFunctionKind::SCH1;
    throw std::invalid_argument("benchmark: unknown test function '" + name + "'");
}

TestFunction TestFunction::make(TestFunctionKind kind, int n)
{
    TestFunction fn;
    fn.kind = kind;
    fn.n = n;
    if (kind == TestFunctionKind::SCH1) {
        fn.lower.assign(static_cast<std::size_t>(n), -1000.0);
        fn.upper.assign(static_cast<std::size_t>(n), 1000.0);
    } else {
        fn.lower.assign(static_cast<std::size_t>(n), 0.0);
        fn.upper.assign(static_cast<std::size_t>(n), 1.0);
    }
    fn.validate();
    return fn;
}

TestFunction TestFunction::sch1(double half_range)
{
    TestFunction fn;
    fn.kind = TestFunctionKind::SCH1;
    fn.n = 1;
    fn.lower = {-half_range};
    fn.upper = {half_range};
    fn.validate();
    return fn;
}

void TestFunction::validate() const
{
    if (n < 1)
        throw std::invalid_argument("benchmark: decision dimension must be positive");
    if (lower.size() != static_cast<std::size_t>(n) || upper.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("benchmark: bounds must have one entry per decision variable");
    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(lower[i]) || !std::isfinite(upper[i]) || !(lower[i] < upper[i]))
            throw std::invalid_argument("benchmark: bounds must be finite with lower < upper");
    }
    switch (kind) {
    case TestFunctionKind::ZDT1:
    case TestFunctionKind::ZDT2:
    case TestFunctionKind::ZDT3:
        if (n < 2)
            throw std::invalid_argument("benchmark: ZDT functions need n >= 2");
        for (int i = 0; i < n; ++i) {
            if (lower[i] != 0.0 || upper[i] != 1.0)
                throw std::invalid_argument("benchmark: ZDT functions require the [0,1]^n domain");
        }
        break;
    case TestFunctionKind::SCH1:
        if (n != 1)
            throw std::invalid_argument("benchmark: SCH1 requires n = 1");
        break;
    }
}

void AffineTransform::validate() const
{
    if (scale.empty() || scale.size() != offset.size())
        throw std::invalid_argument("benchmark: transform scale/offset sizes must match");
    for (double s : scale) {
        if (!std::isfinite(s) || s <= 0.0)
            throw std::invalid_argument("benchmark: transform scale entries must be strictly positive");
    }
    for (double o : offset) {
        if (!std::isfinite(o))
            throw std::invalid_argument("benchmark: transform offsets must be finite");
    }
}

void Concept::validate() const
{
    if (id.empty())
        throw std::invalid_argument("benchmark: concept id must not be empty");
    function.validate();
    transform.validate();
}

std::vector<double> evaluate_raw(const TestFunction& function, std::span<const double> x)
{
    check_domain(function, x);
    g_evaluations.fetch_add(1, std::memory_order_relaxed);

    switch (function.kind) {
    case TestFunctionKind::ZDT1: {
        const double f1 = x[0];
        const double g = zdt_g(x);
        return {f1, g * (1.0 - std::sqrt(f1 / g))};
    }
    case TestFunctionKind::ZDT2: {
        const double f1 = x[0];
        const double g = zdt_g(x);
        const double r = f1 / g;
        return {f1, g * (1.0 - r * r)};
    }
    case TestFunctionKind::ZDT3: {
        const double f1 = x[0];
        const double g = zdt_g(x);
        const double r = f1 / g;
        return {f1, g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * std::numbers::pi * f1))};
    }
    case TestFunctionKind::SCH1: {
        const double t = x[0];
        return {t * t, (t - 2.0) * (t - 2.0)};
    }
    }
    throw std::logic_error("benchmark: unknown function kind");
}

std::vector<double> evaluate_concept(const Concept& cdef, std::span<const double> x)
{
    std::vector<double> y = cdef.custom_objective
        ? cdef.custom_objective(x)
        : evaluate_raw(cdef.function, x);
    if (y.size() != cdef.transform.scale.size())
        throw std::invalid_argument("benchmark: objective dimension does not match transform");
    for (std::size_t k = 0; k < y.size(); ++k)
        y[k] = cdef.transform.scale[k] * y[k] + cdef.transform.offset[k];
    return y;
}

std::uint64_t evaluation_count()
{
    return g_evaluations.load(std::memory_order_relaxed);
}

void reset_evaluation_count()
{
    g_evaluations.store(0, std::memory_order_relaxed);
}

namespace {

Concept make_concept(const std::string& id, TestFunctionKind kind, int n,
                     std::vector<double> scale, std::vector<double> offset)
{
    Concept c;
    c.id = id;
    c.function = TestFunction::make(kind, n);
    c.transform = AffineTransform{std::move(scale), std::move(offset)};
    c.validate();
    return c;
}

} // namespace

std::vector<Concept> portfolio_case1()
{
    constexpr int zdt_n = 30;
    std::vector<Concept> portfolio;
    portfolio.push_back(make_concept("ZDT1-1", TestFunctionKind::ZDT1, zdt_n, {1.0, 1.0}, {0.0, 0.0}));
    portfolio.push_back(make_concept("ZDT1-2", TestFunctionKind::ZDT1, zdt_n, {2.0, 2.0}, {-0.5, -0.5}));
    portfolio.push_back(make_concept("ZDT1-3", TestFunctionKind::ZDT1, zdt_n, {1.0, 1.0}, {0.2, 0.0}));
    portfolio.push_back(make_concept("SCH1-1", TestFunctionKind::SCH1, 1, {1.0, 1.0}, {0.0, 0.0}));
    portfolio.push_back(make_concept("SCH1-2", TestFunctionKind::SCH1, 1, {0.5, 1.0}, {0.0, 0.0}));
    portfolio.push_back(make_concept("ZDT2-1", TestFunctionKind::ZDT2, zdt_n, {1.0, 1.0}, {0.0, 0.0}));
    portfolio.push_back(make_concept("ZDT2-2", TestFunctionKind::ZDT2, zdt_n, {0.7, 0.7}, {0.0, 0.0}));
    portfolio.push_back(make_concept("ZDT2-3", TestFunctionKind::ZDT2, zdt_n, {0.7, 0.7}, {0.2, 0.2}));
    portfolio.push_back(make_concept("ZDT3-1", TestFunctionKind::ZDT3, zdt_n, {1.0, 1.0}, {1.0, 1.0}));
    return portfolio;
}

std::vector<Concept> portfolio_case2()
{
    std::vector<Concept> portfolio = portfolio_case1();
    // ZDT3-1 offset override: (-0.6, 1.0) puts the ZDT3 dip around f1 ~ 0.85,
    // f2 ~ -0.77 at roughly (0.25, 0.23), inside the (0.3, 0.4) window.
    portfolio.back().transform.offset = {-0.6, 1.0};
    return portfolio;
}

} // namespace woi
