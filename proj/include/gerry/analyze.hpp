#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gerry/eval.hpp"
#include "gerry/metrics.hpp"
#include "gerry/plan.hpp"
#include "gerry/rational.hpp"

namespace gerry {

enum class SweepMode { full, dedup };

struct SweepRecord {
    std::uint64_t bits = 0;
    int num = 0;
    Rational clus;
    std::optional<Rational> clusp;  // absent when no edge leaves a dot
    RepStats rep;
    int orbit_size = 1;  // always 1 in full mode
};

// Streams one record per distribution (or per D4 representative in dedup
// mode) in increasing bit-vector order, exact over all plans. Worker count
// does not affect the emitted sequence.
void sweep(const DualGraph& g, const PlanSet& plans, SweepMode mode,
           std::optional<int> num_filter, int threads,
           const std::function<void(const SweepRecord&)>& fn,
           std::optional<std::uint64_t> resume_after = std::nullopt);

// Least squares; all-equal x gives slope 0 with intercept = mean(y).
struct OlsAccumulator {
    long double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    void add(double x, double y, double w = 1.0);
    std::pair<double, double> slope_intercept() const;  // throws on empty
};

std::pair<double, double> ols_slope(const std::vector<std::pair<double, double>>& points);

struct SlopeRow {
    int num = 0;
    double slope = 0.0;
    double intercept = 0.0;
    long long count = 0;
};

// Per-Num regression of E(Rep) on ClusP. In dedup mode, weighting each
// representative by its orbit size reproduces the full-mode regression
// exactly (both scores are D4-invariant).
class SlopeTable {
  public:
    explicit SlopeTable(int k, bool weight_by_orbit = false);
    void add(const SweepRecord& rec);
    std::vector<SlopeRow> rows() const;  // one row per num in [1, k-1] seen

  private:
    bool weight_by_orbit_;
    std::vector<OlsAccumulator> acc_;
    std::vector<long long> counts_;
};

// Best/worst record per num by E(Rep); ties go to the smaller bit vector.
class ExtremesTracker {
  public:
    explicit ExtremesTracker(int k);
    void add(const SweepRecord& rec);
    const SweepRecord& best(int num) const;   // throws if num unseen
    const SweepRecord& worst(int num) const;
    bool has(int num) const;

  private:
    std::vector<std::optional<SweepRecord>> best_, worst_;
};

std::pair<SweepRecord, SweepRecord> extremes(const std::vector<SweepRecord>& records, int num);

// `.`/`*` rendering of a distribution on the n x n grid, one row per line.
std::string ascii_grid(std::uint64_t bits, int n);

// ---- sweep CSV (see cli): bits_hex,num,clus,clusp,e_rep,var_rep,min_rep,
// max_rep,hist_0,hist_0_5,...  decimals to 12 significant digits, empty
// clusp field when undefined.
void write_sweep_header(std::ostream& out, int n_districts);
void write_sweep_record(std::ostream& out, const SweepRecord& rec);

struct ParsedSweepRecord {
    std::uint64_t bits = 0;
    int num = 0;
    double clus = 0.0;
    std::optional<double> clusp;
    double e_rep = 0.0;
    double var_rep = 0.0;
    double min_rep = 0.0;
    double max_rep = 0.0;
    std::vector<long long> histogram;
};

// Throws std::runtime_error mentioning the 1-based line number on bad input.
std::vector<ParsedSweepRecord> read_sweep_csv(std::istream& in);

void write_slope_csv(std::ostream& out, const std::vector<SlopeRow>& rows);

}  // namespace gerry
