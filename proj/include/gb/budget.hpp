#ifndef GB_BUDGET_HPP
#define GB_BUDGET_HPP

#include <cstdint>
#include <cstdlib>
#include <string>

#include "gb/errors.hpp"

namespace gb {

// Tick counter capping exponential searches (brute-force contraction
// sequences, induced-path DFS, witness search). One tick is one elementary
// search expansion. The CLI exposes the cap through GB_WORK_BUDGET.
class WorkBudget {
public:
    explicit WorkBudget(std::uint64_t cap) : cap_(cap) {}
    WorkBudget() : cap_(default_cap()) {}

    // Counts work; returns false once the cap is crossed.
    bool try_tick(std::uint64_t amount = 1) {
        used_ += amount;
        return used_ <= cap_;
    }

    void tick(std::uint64_t amount = 1) {
        if (!try_tick(amount))
            throw budget_exceeded("work budget exceeded (" + std::to_string(cap_) + " ticks)");
    }

    bool exhausted() const { return used_ > cap_; }
    std::uint64_t used() const { return used_; }
    std::uint64_t cap() const { return cap_; }

    static std::uint64_t default_cap() {
        if (const char* env = std::getenv("GB_WORK_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && v > 0) return v;
        }
        return 400'000'000ULL;
    }

private:
    std::uint64_t cap_;
    std::uint64_t used_ = 0;
};

} // namespace gb

#endif
