// Copyright 2026 The homewheel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "homewheel/tegument.hpp"

#include <algorithm>
#include <cmath>

namespace homewheel {
namespace {

std::size_t servo_of(TegumentSegment segment) {
    switch (segment) {
        case TegumentSegment::BodyGantry: return 1;
        case TegumentSegment::ShaftAxial: return 0;
        case TegumentSegment::Wrist: return 2;
    }
    return 0;
}

double twist_of(const TwistLedger& ledger, TegumentSegment segment) {
    switch (segment) {
        case TegumentSegment::BodyGantry: return ledger.body_gantry.degrees;
        case TegumentSegment::ShaftAxial: return ledger.shaft_axial.degrees;
        case TegumentSegment::Wrist: return ledger.wrist.degrees;
    }
    return 0.0;
}

constexpr std::array kSegments{TegumentSegment::BodyGantry, TegumentSegment::ShaftAxial,
                               TegumentSegment::Wrist};

}  // namespace

std::string to_string(TegumentSegment segment) {
    switch (segment) {
        case TegumentSegment::BodyGantry: return "body_gantry";
        case TegumentSegment::ShaftAxial: return "shaft_axial";
        case TegumentSegment::Wrist: return "wrist";
    }
    return "unknown";
}

TwistLedger update_ledger(const TwistLedger& ledger, const ServoState& state) {
    return {unwrap_angle(ledger.body_gantry, wrap_deg(state.s2)),
            unwrap_angle(ledger.shaft_axial, wrap_deg(state.s1)),
            unwrap_angle(ledger.wrist, wrap_deg(state.s3))};
}

TwistLedger ledger_at(const ServoState& state) { return {{state.s2}, {state.s1}, {state.s3}}; }

IntegrityReport check_integrity(std::span<const LedgerSample> history, const ServoLimits& limits) {
    IntegrityReport report;
    for (const auto& sample : history) {
        for (const auto segment : kSegments) {
            const double value = twist_of(sample.ledger, segment);
            auto& peak = report.max_abs_twist[static_cast<std::size_t>(segment)];
            peak = std::max(peak, std::abs(value));
            if (!limits.range[servo_of(segment)].contains(value)) {
                report.violations.push_back({sample.t, segment, value});
            }
        }
    }
    return report;
}

}  // namespace homewheel
