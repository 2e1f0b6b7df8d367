// Copyright 2026 The qcalc Authors
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

#include <map>

namespace qcalc {

template<typename Fn>
std::vector<ScaleBucket> dyadicBuckets(const SetSample& sample, bool ordered, std::size_t minPairs,
                                       Fn&& value) {
    std::map<int, ScaleBucket> byExponent;
    const std::size_t n = sample.pointCount();
    auto visit = [&](std::size_t x, std::size_t y) {
        const double d = sample.distance(x, y);
        const double v = value(x, y, d);
        const int e = dyadicExponent(d);
        ScaleBucket& bucket = byExponent[e];
        bucket.exponent = e;
        ++bucket.pairs;
        if (v > bucket.supremum || bucket.pairs == 1) {
            bucket.supremum = v;
            bucket.witnessDistance = d;
        }
    };
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = ordered ? 0 : x + 1; y < n; ++y) {
            if (x != y) {
                visit(x, y);
            }
        }
    }
    std::vector<ScaleBucket> buckets;
    for (const auto& [e, bucket] : byExponent) {
        if (bucket.pairs >= minPairs) {
            buckets.push_back(bucket);
        }
    }
    return buckets;
}

} // namespace qcalc
