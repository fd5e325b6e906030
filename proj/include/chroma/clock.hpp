#ifndef CHROMA_CLOCK_HPP
#define CHROMA_CLOCK_HPP

#include <chrono>
#include <cstdint>

namespace chroma {

// Time source for all solver budgets. Two implementations: WallClock reads
// the steady clock, TickClock advances only through step() so that a run is
// a pure function of (graph, seed, config).
class Clock {
public:
    virtual ~Clock() = default;

    // seconds elapsed since construction
    virtual double now() const = 0;

    // advance simulated time; no-op on the wall clock
    virtual void step(std::uint64_t n = 1) = 0;
};

class WallClock final : public Clock {
public:
    WallClock() : start_(std::chrono::steady_clock::now()) {}

    double now() const override
    {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double>(d).count();
    }

    void step(std::uint64_t) override {}

private:
    std::chrono::steady_clock::time_point start_;
};

class TickClock final : public Clock {
public:
    explicit TickClock(double seconds_per_tick = 1e-3)
        : seconds_per_tick_(seconds_per_tick)
    {
    }

    double now() const override
    {
        return static_cast<double>(ticks_) * seconds_per_tick_;
    }

    void step(std::uint64_t n = 1) override { ticks_ += n; }

private:
    double seconds_per_tick_;
    std::uint64_t ticks_ = 0;
};

// Absolute point on a clock; budget loops call clock->step() then expired().
struct Deadline {
    Clock* clock;
    double at;

    static Deadline after(Clock& c, double budget)
    {
        return Deadline{&c, c.now() + budget};
    }

    // the earlier of this deadline and another budget from now
    Deadline clipped(double budget) const
    {
        double t = clock->now() + budget;
        return Deadline{clock, t < at ? t : at};
    }

    bool expired() const { return clock->now() >= at; }
};

} // namespace chroma

#endif
