#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace woi {

enum class TestFunctionKind { ZDT1, ZDT2, ZDT3, SCH1 };

const char* to_string(TestFunctionKind kind);
TestFunctionKind test_function_kind_from_string(const std::string& name);

// A bi-objective benchmark function together with its decision box.
// ZDT kinds live on [0,1]^n; SCH1 is one-dimensional on a symmetric range.
struct TestFunction {
    TestFunctionKind kind = TestFunctionKind::ZDT1;
    int n = 0;
    std::vector<double> lower;
    std::vector<double> upper;

    static TestFunction make(TestFunctionKind kind, int n);
    static TestFunction sch1(double half_range);

    void validate() const;
};

// Componentwise y' = scale * y + offset. Scale must stay positive so the
// minimization sense is preserved.
struct AffineTransform {
    std::vector<double> scale;
    std::vector<double> offset;

    void validate() const;
};

using Objective = std::function<std::vector<double>(std::span<const double>)>;

// Named design space plus objective map. The raw map is the benchmark
// function unless a custom objective callable is supplied; the transform is
// applied on top either way.
struct Concept {
    std::string id;
    TestFunction function;
    AffineTransform transform;
    Objective custom_objective; // optional; replaces the benchmark formula

    void validate() const;
};

std::vector<double> evaluate_raw(const TestFunction& function, std::span<const double> x);
std::vector<double> evaluate_concept(const Concept& cdef, std::span<const double> x);

// Process-wide count of raw objective evaluations, kept inside the objective
// functions themselves so callers can cross-check their own accounting.
std::uint64_t evaluation_count();
void reset_evaluation_count();

// The nine-concept benchmark portfolio (ZDT1/ZDT2/ZDT3/SCH1 variants with
// per-concept objective transforms).
std::vector<Concept> portfolio_case1();

// Same portfolio except ZDT3-1 carries an offset override that drops part of
// ZDT3's negative-f2 dip below (0.3, 0.4); with that window exactly two
// concepts are satisficing. The override lives in the shipped case2 config as
// well, so it can be edited without rebuilding.
std::vector<Concept> portfolio_case2();

} // namespace woi
