#include "logcave/pascal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>
#include <utility>
#include <vector>

#include "logcave/errors.hpp"
#include "logcave/qfield.hpp"

namespace logcave {

namespace {

double ms_since(const std::chrono::steady_clock::time_point& start) {
    const auto end = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(end - start).count();
}

std::size_t worker_count(std::size_t jobs) {
    long configured = 0;
    if (const char* env = std::getenv("LOGCAVE_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed >= 1) {
            configured = parsed;
        }
    }
    if (configured < 1) {
        const unsigned hw = std::thread::hardware_concurrency();
        configured = hw == 0 ? 1 : static_cast<long>(hw);
    }
    return std::min(jobs, static_cast<std::size_t>(configured));
}

long component_iterations(const RowReport& rep) {
    long used = 0;
    if (rep.classic) {
        used = std::max(used, rep.classic->iterations_applied);
    }
    if (rep.comparative) {
        used = std::max(used, rep.comparative->iterations);
    }
    if (rep.generalized) {
        used = std::max(used, rep.generalized->iterations_applied);
    }
    return used;
}

}  // namespace

Seq binomial_row(long n) {
    if (n < 0) {
        throw error("row index must be nonnegative");
    }
    std::vector<QField> entries;
    entries.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(k));
        entries.emplace_back(Rat(b));
    }
    return Seq(std::move(entries));
}

RowReport verify_row(long n, RowMode mode, long max_iters) {
    const auto start = std::chrono::steady_clock::now();
    RowReport rep;
    rep.n = n;
    const Seq row = binomial_row(n);
    const QField classic_step{Rat(1)};
    if (mode == RowMode::r0 || mode == RowMode::both) {
        rep.classic = certify_infinite(row, r0(), classic_step, max_iters);
    }
    if (mode == RowMode::r1 || mode == RowMode::both) {
        rep.comparative = scan_orbit(row, r1(), classic_step, max_iters);
        rep.generalized = certify_infinite(row, r1(), r1(), max_iters);
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

RangeReport verify_range(long lo, long hi, RowMode mode, long max_iters) {
    if (lo < 0) {
        throw error("row index must be nonnegative");
    }
    if (hi < lo) {
        throw error("row range is empty: the upper bound is below the lower bound");
    }
    const auto start = std::chrono::steady_clock::now();
    RangeReport out;
    const std::size_t count = static_cast<std::size_t>(hi - lo) + 1;
    out.rows.resize(count);

    const std::size_t workers = worker_count(count);
    std::atomic<long> next{lo};
    auto drain = [&] {
        for (;;) {
            const long n = next.fetch_add(1);
            if (n > hi) {
                return;
            }
            out.rows[static_cast<std::size_t>(n - lo)] = verify_row(n, mode, max_iters);
        }
    };
    if (workers <= 1) {
        drain();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t i = 0; i < workers; ++i) {
            pool.emplace_back(drain);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    for (const RowReport& rep : out.rows) {
        out.max_iterations = std::max(out.max_iterations, component_iterations(rep));
    }
    out.total_ms = ms_since(start);
    return out;
}

}  // namespace logcave
