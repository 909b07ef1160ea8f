#include "gerry/analyze.hpp"

#include <bit>
#include <charconv>
#include <condition_variable>
#include <cstdio>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gerry/enumerate.hpp"
#include "gerry/symmetry.hpp"

namespace gerry {

namespace {

SweepRecord make_record(const DualGraph& g, const PlanSet& plans, std::uint64_t bits,
                        const D4Table* d4) {
    SweepRecord rec;
    rec.bits = bits;
    rec.num = std::popcount(bits);
    rec.clus = clus(g, bits);
    if (rec.num > 0) {
        try {
            rec.clusp = clusp(g, bits);
        } catch (const UndefinedMetric&) {
            rec.clusp = std::nullopt;
        }
    }
    rec.rep = rep_stats(bits, plans);
    rec.orbit_size = d4 ? d4->orbit_size(bits) : 1;
    return rec;
}

}  // namespace

void sweep(const DualGraph& g, const PlanSet& plans, SweepMode mode,
           std::optional<int> num_filter, int threads,
           const std::function<void(const SweepRecord&)>& fn,
           std::optional<std::uint64_t> resume_after) {
    if (!g.is_grid() || g.rows != g.cols)
        throw std::invalid_argument("sweep: requires a square grid graph");
    const int k = static_cast<int>(g.k);
    const int n = g.rows;
    if (num_filter && (*num_filter < 0 || *num_filter > k))
        throw std::invalid_argument("sweep: num filter out of range");

    auto stream = [&] {
        return resume_after ? DistStream(k, num_filter, *resume_after)
                            : DistStream(k, num_filter);
    };

    if (threads < 1) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    if (threads == 1) {
        std::optional<D4Table> d4;
        if (mode == SweepMode::dedup) d4.emplace(n);
        DistStream st = stream();
        for (auto v = st.next(); v; v = st.next()) {
            if (mode == SweepMode::dedup && d4->canonical(*v) != *v) continue;
            fn(make_record(g, plans, *v, d4 ? &*d4 : nullptr));
        }
        return;
    }

    // Block-cyclic work split with an ordered merge so the output sequence is
    // identical for any worker count.
    constexpr std::uint64_t kBlock = 1024;
    const std::uint64_t window = 16ull * threads;
    std::mutex mu;
    std::condition_variable cv_data, cv_space;
    std::map<std::uint64_t, std::vector<SweepRecord>> done;
    std::uint64_t next_consume = 0;
    int active = threads;

    auto publish = [&](std::uint64_t blk, std::vector<SweepRecord>&& buf) {
        std::unique_lock lk(mu);
        cv_space.wait(lk, [&] { return blk < next_consume + window; });
        done.emplace(blk, std::move(buf));
        cv_data.notify_all();
    };

    auto worker = [&](int tid) {
        std::optional<D4Table> d4;
        if (mode == SweepMode::dedup) d4.emplace(n);
        DistStream st = stream();
        std::vector<SweepRecord> buf;
        std::uint64_t cur_block = ~std::uint64_t{0};
        std::uint64_t idx = 0;
        for (auto v = st.next(); v; v = st.next(), ++idx) {
            std::uint64_t blk = idx / kBlock;
            if (blk % threads != static_cast<std::uint64_t>(tid)) continue;
            if (blk != cur_block) {
                if (cur_block != ~std::uint64_t{0}) publish(cur_block, std::move(buf));
                cur_block = blk;
                buf.clear();
            }
            if (mode == SweepMode::dedup && d4->canonical(*v) != *v) continue;
            buf.push_back(make_record(g, plans, *v, d4 ? &*d4 : nullptr));
        }
        if (cur_block != ~std::uint64_t{0}) publish(cur_block, std::move(buf));
        std::lock_guard lk(mu);
        --active;
        cv_data.notify_all();
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);

    {
        std::unique_lock lk(mu);
        for (;;) {
            cv_data.wait(lk, [&] { return done.count(next_consume) || active == 0; });
            auto it = done.find(next_consume);
            if (it == done.end()) {
                if (active == 0 && done.empty()) break;
                if (active == 0) {
                    // remaining keys can only be >= next_consume from workers
                    // that skipped empty tails; consume in key order
                    it = done.begin();
                    next_consume = it->first;
                } else {
                    continue;
                }
            }
            std::vector<SweepRecord> buf = std::move(it->second);
            done.erase(it);
            ++next_consume;
            cv_space.notify_all();
            lk.unlock();
            for (const SweepRecord& r : buf) fn(r);
            lk.lock();
        }
    }
    for (auto& th : pool) th.join();
}

void OlsAccumulator::add(double x, double y, double w) {
    n += w;
    sx += w * static_cast<long double>(x);
    sy += w * static_cast<long double>(y);
    sxx += w * static_cast<long double>(x) * x;
    sxy += w * static_cast<long double>(x) * y;
}

std::pair<double, double> OlsAccumulator::slope_intercept() const {
    if (n <= 0) throw std::invalid_argument("ols: no points");
    long double varx = sxx - sx * sx / n;
    long double meany = sy / n;
    if (varx <= 0) return {0.0, static_cast<double>(meany)};
    long double slope = (sxy - sx * sy / n) / varx;
    long double intercept = meany - slope * sx / n;
    return {static_cast<double>(slope), static_cast<double>(intercept)};
}

std::pair<double, double> ols_slope(const std::vector<std::pair<double, double>>& points) {
    OlsAccumulator acc;
    for (auto [x, y] : points) acc.add(x, y);
    return acc.slope_intercept();
}

SlopeTable::SlopeTable(int k, bool weight_by_orbit)
    : weight_by_orbit_(weight_by_orbit), acc_(k + 1), counts_(k + 1, 0) {}

void SlopeTable::add(const SweepRecord& rec) {
    if (rec.num == 0 || !rec.clusp) return;  // no ClusP to regress on
    double w = weight_by_orbit_ ? rec.orbit_size : 1.0;
    acc_[rec.num].add(rec.clusp->value(), rec.rep.expectation.value(), w);
    counts_[rec.num] += weight_by_orbit_ ? rec.orbit_size : 1;
}

std::vector<SlopeRow> SlopeTable::rows() const {
    std::vector<SlopeRow> out;
    for (int num = 1; num + 1 < static_cast<int>(acc_.size()); ++num) {
        if (counts_[num] == 0) continue;
        auto [slope, intercept] = acc_[num].slope_intercept();
        out.push_back({num, slope, intercept, counts_[num]});
    }
    return out;
}

ExtremesTracker::ExtremesTracker(int k) : best_(k + 1), worst_(k + 1) {}

void ExtremesTracker::add(const SweepRecord& rec) {
    auto& b = best_[rec.num];
    auto& w = worst_[rec.num];
    if (!b || rec.rep.expectation.value() > b->rep.expectation.value() ||
        (rec.rep.expectation == b->rep.expectation && rec.bits < b->bits))
        b = rec;
    if (!w || rec.rep.expectation.value() < w->rep.expectation.value() ||
        (rec.rep.expectation == w->rep.expectation && rec.bits < w->bits))
        w = rec;
}

bool ExtremesTracker::has(int num) const {
    return num >= 0 && num < static_cast<int>(best_.size()) && best_[num].has_value();
}

const SweepRecord& ExtremesTracker::best(int num) const {
    if (!has(num)) throw std::out_of_range("extremes: no records for num");
    return *best_[num];
}

const SweepRecord& ExtremesTracker::worst(int num) const {
    if (!has(num)) throw std::out_of_range("extremes: no records for num");
    return *worst_[num];
}

std::pair<SweepRecord, SweepRecord> extremes(const std::vector<SweepRecord>& records, int num) {
    int k = 63;
    ExtremesTracker t(k);
    for (const auto& r : records)
        if (r.num == num) t.add(r);
    return {t.best(num), t.worst(num)};
}

std::string ascii_grid(std::uint64_t bits, int n) {
    std::string s;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) s.push_back((bits >> (r * n + c)) & 1 ? '*' : '.');
        s.push_back('\n');
    }
    return s;
}

namespace {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

void write_sweep_header(std::ostream& out, int n_districts) {
    out << "bits_hex,num,clus,clusp,e_rep,var_rep,min_rep,max_rep";
    for (int h = 0; h <= 2 * n_districts; ++h) {
        out << ",hist_" << (h / 2);
        if (h % 2) out << "_5";
    }
    out << '\n';
}

void write_sweep_record(std::ostream& out, const SweepRecord& rec) {
    char hex[20];
    std::snprintf(hex, sizeof hex, "%llx", static_cast<unsigned long long>(rec.bits));
    out << hex << ',' << rec.num << ',' << fmt12(rec.clus.value()) << ',';
    if (rec.clusp) out << fmt12(rec.clusp->value());
    out << ',' << fmt12(rec.rep.expectation.value()) << ',' << fmt12(rec.rep.variance.value())
        << ',' << fmt12(rec.rep.min_seats()) << ',' << fmt12(rec.rep.max_seats());
    for (std::int64_t h : rec.rep.histogram) out << ',' << h;
    out << '\n';
}

std::vector<ParsedSweepRecord> read_sweep_csv(std::istream& in) {
    std::vector<ParsedSweepRecord> out;
    std::string line;
    long lineno = 0;
    bool header_seen = false;
    auto fail = [&](const std::string& why) {
        throw std::runtime_error("sweep csv line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line.rfind("bits_hex,", 0) != 0) fail("expected header row");
            header_seen = true;
            continue;
        }
        std::vector<std::string> f;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            f.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (f.size() < 9) fail("too few fields");
        ParsedSweepRecord r;
        try {
            r.bits = std::stoull(f[0], nullptr, 16);
            r.num = std::stoi(f[1]);
            r.clus = std::stod(f[2]);
            if (!f[3].empty()) r.clusp = std::stod(f[3]);
            r.e_rep = std::stod(f[4]);
            r.var_rep = std::stod(f[5]);
            r.min_rep = std::stod(f[6]);
            r.max_rep = std::stod(f[7]);
            for (std::size_t i = 8; i < f.size(); ++i) r.histogram.push_back(std::stoll(f[i]));
        } catch (const std::exception&) {
            fail("malformed field");
        }
        out.push_back(std::move(r));
    }
    if (!header_seen) {
        lineno = 1;
        fail("empty file");
    }
    return out;
}

void write_slope_csv(std::ostream& out, const std::vector<SlopeRow>& rows) {
    out << "num,slope,intercept,count\n";
    for (const SlopeRow& r : rows)
        out << r.num << ',' << fmt12(r.slope) << ',' << fmt12(r.intercept) << ',' << r.count
            << '\n';
}

}  // namespace gerry
