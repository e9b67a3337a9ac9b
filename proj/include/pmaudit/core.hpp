#pragma once

// Shared primitives: error type, calendar day, CSV helpers, parallel loop.

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace pmaudit {

/// Library failure with a stable machine-readable code plus a human message.
class PmError : public std::runtime_error {
public:
    PmError(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
    throw PmError(code, msg);
}

/// Calendar day in UTC, no time of day. Stored as days since 1970-01-01.
class Day {
public:
    Day() = default;
    explicit constexpr Day(std::int32_t days_since_epoch) : v_(days_since_epoch) {}

    static Day from_ymd(int year, unsigned month, unsigned day) {
        const std::chrono::year_month_day ymd{std::chrono::year{year},
                                              std::chrono::month{month},
                                              std::chrono::day{day}};
        if (!ymd.ok()) fail("UnparseableDate", "invalid calendar day");
        return Day(static_cast<std::int32_t>(
            std::chrono::sys_days(ymd).time_since_epoch().count()));
    }

    /// Parses strict ISO-8601 "YYYY-MM-DD".
    static Day parse(std::string_view s) {
        if (s.size() != 10 || s[4] != '-' || s[7] != '-')
            fail("UnparseableDate", "expected YYYY-MM-DD, got '" + std::string(s) + "'");
        int y = 0;
        unsigned m = 0, d = 0;
        auto num = [&](std::string_view part, auto& out) {
            auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
            return ec == std::errc() && p == part.data() + part.size();
        };
        if (!num(s.substr(0, 4), y) || !num(s.substr(5, 2), m) || !num(s.substr(8, 2), d))
            fail("UnparseableDate", "non-numeric date field in '" + std::string(s) + "'");
        return from_ymd(y, m, d);
    }

    std::string to_string() const {
        const std::chrono::year_month_day ymd{
            std::chrono::sys_days{std::chrono::days{v_}}};
        char buf[16];
        std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(ymd.year()),
                      unsigned(ymd.month()), unsigned(ymd.day()));
        return buf;
    }

    std::int32_t raw() const noexcept { return v_; }

    friend Day operator+(Day a, std::int32_t n) { return Day(a.v_ + n); }
    friend std::int32_t operator-(Day a, Day b) { return a.v_ - b.v_; }
    friend bool operator==(Day a, Day b) = default;
    friend auto operator<=>(Day a, Day b) = default;

private:
    std::int32_t v_ = 0;
};

/// Splits one CSV line on commas. The file formats used here need no quoting.
inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

/// Shortest round-trip decimal representation of a double.
inline std::string dtos(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, p);
}

/// Runs fn(0..n-1) on up to `jobs` threads. Tasks write disjoint slots, so the
/// result is independent of scheduling.
inline void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(error);
}

} // namespace pmaudit
