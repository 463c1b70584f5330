/*
 * Copyright 2026 The pgsuite Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#ifndef PGSUITE_DEADLINE_HPP
#define PGSUITE_DEADLINE_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace pgsuite {

/// Thrown by long-running measures once their deadline has passed.
class Timeout : public std::runtime_error
{
public:
    Timeout() : std::runtime_error("deadline exceeded") {}
};

/**
 * A point in time after which cooperative computations give up. The default
 * deadline never expires.
 */
class Deadline
{
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;
    explicit Deadline(Clock::time_point at) : at_(at) {}

    static Deadline never() { return {}; }
    static Deadline after(std::chrono::nanoseconds budget) { return Deadline(Clock::now() + budget); }

    [[nodiscard]] bool unlimited() const { return !at_.has_value(); }
    [[nodiscard]] bool expired() const { return at_ && Clock::now() >= *at_; }
    void check() const
    {
        if (expired()) throw Timeout();
    }

    /// The earlier of two deadlines.
    [[nodiscard]] Deadline min(const Deadline& other) const
    {
        if (!at_) return other;
        if (!other.at_) return *this;
        return Deadline(std::min(*at_, *other.at_));
    }

private:
    std::optional<Clock::time_point> at_;
};

/// Amortises clock reads: consults the deadline every 2^shift ticks.
class DeadlinePoller
{
public:
    explicit DeadlinePoller(const Deadline& deadline, unsigned shift = 10)
        : deadline_(deadline), mask_((1U << shift) - 1)
    {
    }

    void tick()
    {
        if (deadline_.unlimited()) return;
        if ((++count_ & mask_) == 0) deadline_.check();
    }

    void check_now() const { deadline_.check(); }

private:
    const Deadline& deadline_;
    std::uint32_t mask_;
    std::uint32_t count_ = 0;
};

}  // namespace pgsuite

#endif
