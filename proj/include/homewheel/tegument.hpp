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

#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "homewheel/mechanism.hpp"
#include "homewheel/rotations.hpp"

namespace homewheel {

// Accumulated twist of each tegument segment. The membrane is anchored to every skeletal
// link, so each segment absorbs exactly the relative rotation of its joint. The wheel's outer
// surface turns rigidly with the hub and adds no term.
struct TwistLedger {
    UnwrappedAngle body_gantry;  // follows s2
    UnwrappedAngle shaft_axial;  // follows s1
    UnwrappedAngle wrist;        // follows s3

    friend bool operator==(const TwistLedger&, const TwistLedger&) = default;
};

enum class TegumentSegment { BodyGantry, ShaftAxial, Wrist };

std::string to_string(TegumentSegment segment);

// Lifts each joint reading continuously. Precondition: no servo moved 180 degrees or more
// since the ledger was last updated. For in-range states the lift equals the raw angle.
TwistLedger update_ledger(const TwistLedger& ledger, const ServoState& state);

// Ledger of a tegument that reached `state` from rest along an in-range path.
TwistLedger ledger_at(const ServoState& state);

struct LedgerSample {
    double t;  // s
    TwistLedger ledger;
};

struct TwistViolation {
    double t;
    TegumentSegment segment;
    double value;
};

struct IntegrityReport {
    std::array<double, 3> max_abs_twist{};  // indexed by TegumentSegment
    std::vector<TwistViolation> violations;

    bool ok() const { return violations.empty(); }
};

// Flags every sample whose lifted twist leaves the range of the joint the segment follows.
IntegrityReport check_integrity(std::span<const LedgerSample> history, const ServoLimits& limits);

}  // namespace homewheel
