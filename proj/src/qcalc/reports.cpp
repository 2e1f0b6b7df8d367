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

#include "qcalc/reports.hpp"

#include <algorithm>
#include <charconv>

namespace qcalc::reports {

namespace {

Json pairJson(std::size_t i, std::size_t j) {
    return Json::array({i, j});
}

Json bucketsJson(const std::vector<ScaleBucket>& buckets) {
    Json out = Json::array();
    for (const auto& b : buckets) {
        Json row;
        row["exponent"] = b.exponent;
        row["lower"] = std::ldexp(1.0, b.exponent);
        row["upper"] = std::ldexp(1.0, b.exponent + 1);
        row["pairs"] = b.pairs;
        row["sup"] = b.supremum;
        row["witness_distance"] = b.witnessDistance;
        out.push_back(std::move(row));
    }
    return out;
}

Json fitJson(const ModulusFit& fit) {
    Json out;
    out["exact"] = fit.exact;
    if (!fit.exact) {
        out["alpha_hat"] = fit.alphaHat;
        out["constant_hat"] = fit.constantHat;
        out["fit_residual"] = fit.fitResidual;
        out["in_holder_range"] = fit.inHolderRange;
    }
    out["scales"] = bucketsJson(fit.scales);
    return out;
}

Json pairRecord(const RemainderPair& p) {
    Json out;
    out["x"] = p.x;
    out["y"] = p.y;
    out["distance"] = p.distance;
    out["remainder"] = p.remainder;
    out["bound"] = p.bound;
    return out;
}

} // namespace

Json envelope(const std::string& command, bool passed) {
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = command;
    doc["status"] = passed ? "pass" : "fail";
    return doc;
}

Json validation(const SetSample& sample, const std::vector<Violation>& violations) {
    Json doc = envelope("validate", violations.empty());
    doc["label"] = sample.label();
    doc["points"] = sample.pointCount();
    doc["edges"] = sample.edgeCount();
    Json list = Json::array();
    for (const auto& v : violations) {
        Json row;
        row["kind"] = v.kind;
        row["indices"] = v.indices;
        row["detail"] = v.detail;
        list.push_back(std::move(row));
    }
    doc["violations"] = std::move(list);
    return doc;
}

Json build(const SetSample& sample, const std::string& kind) {
    Json doc = envelope("build", true);
    doc["kind"] = kind;
    doc["label"] = sample.label();
    doc["set"] = sample.fingerprint();
    doc["ambient_dim"] = sample.ambientDim();
    doc["points"] = sample.pointCount();
    doc["edges"] = sample.edgeCount();
    double total = 0.0;
    for (const auto& e : sample.edges()) {
        total += e.length;
    }
    doc["total_length"] = total;
    return doc;
}

Json chordArc(const ChordArcReport& report) {
    Json doc = envelope("k-estimate", true);
    doc["k_hat"] = report.kHat;
    doc["witness_pair"] = pairJson(report.witnessI, report.witnessJ);
    doc["witness_geodesic"] = report.witnessGeodesic;
    doc["witness_chord"] = report.witnessChord;
    doc["pair_count"] = report.pairCount;
    doc["method"] = report.method == ChordArcMethod::Exhaustive ? "exhaustive" : "sampled";
    if (report.method == ChordArcMethod::Sampled) {
        doc["seed"] = report.seed;
    }
    return doc;
}

Json geodesic(std::size_t i, std::size_t j, double distance, const PolylinePath& path) {
    Json doc = envelope("geodesic", true);
    doc["from"] = i;
    doc["to"] = j;
    doc["distance"] = distance;
    doc["path"] = path.vertices;
    doc["path_length"] = path.length();
    return doc;
}

Json localToGlobal(const LocalToGlobalReport& report) {
    Json doc = envelope("local-to-global", report.passed);
    doc["radius"] = report.radius;
    doc["local_constant"] = report.localConstant;
    doc["k"] = report.k;
    doc["hypothesis_holds"] = report.hypothesisHolds;
    doc["measured_local"] = report.measuredLocal;
    doc["global_constant"] = report.globalConstant;
    doc["global_witness"] = pairJson(report.globalWitnessI, report.globalWitnessJ);
    doc["bound"] = report.bound;
    Json list = Json::array();
    for (const auto& v : report.localViolations) {
        Json row;
        row["pair"] = pairJson(v.i, v.j);
        row["distance"] = v.distance;
        row["difference"] = v.difference;
        list.push_back(std::move(row));
    }
    doc["local_violations"] = std::move(list);
    return doc;
}

Json ftc(std::size_t from, std::size_t to, double integral, double change, double residual,
         const PolylinePath& path, double tol) {
    Json doc = envelope("ftc", residual <= tol);
    doc["from"] = from;
    doc["to"] = to;
    doc["path"] = path.vertices;
    doc["path_length"] = path.length();
    doc["integral"] = integral;
    doc["change"] = change;
    doc["residual"] = residual;
    doc["tolerance"] = tol;
    return doc;
}

Json reconstruction(const Reconstruction& result, double tol) {
    Json doc = envelope("reconstruct", result.integrable);
    doc["basepoint"] = result.basepoint;
    doc["cycles_checked"] = result.cyclesChecked;
    doc["worst_defect"] = result.worstDefect;
    if (result.worstEdge) {
        doc["worst_edge"] = pairJson(result.worstEdge->first, result.worstEdge->second);
    }
    doc["tolerance"] = tol;
    if (!result.integrable) {
        doc["warning"] = "non-integrable";
    }
    doc["field"] = io::toJson(result.field);
    return doc;
}

Json remainderBound(const RemainderBoundReport& report, std::size_t maxListed) {
    Json doc = envelope("remainder-check", report.passed);
    doc["k"] = report.k;
    doc["tolerance"] = report.tol;
    doc["ordered_pairs"] = report.orderedPairs;
    doc["violation_count"] = report.violations.size();
    doc["max_slack_ratio"] = report.maxSlackRatio;
    Json list = Json::array();
    for (std::size_t v = 0; v < report.violations.size() && v < maxListed; ++v) {
        list.push_back(pairRecord(report.violations[v]));
    }
    doc["violations"] = std::move(list);
    doc["violations_truncated"] = report.violations.size() > maxListed;
    return doc;
}

Json holderFit(const ModulusReport& report) {
    const bool ok = (report.remainder.exact || report.remainder.inHolderRange) &&
                    (report.differential.exact || report.differential.inHolderRange);
    Json doc = envelope("holder-fit", ok);
    doc["k"] = report.k;
    doc["remainder_modulus"] = fitJson(report.remainder);
    doc["differential_modulus"] = fitJson(report.differential);
    return doc;
}

Json whitneyC1(const WhitneyC1Report& report) {
    Json doc = envelope("whitney", report.passed);
    doc["smallest_scale"] = report.smallestScale;
    doc["smallest_ratio"] = report.smallestRatio;
    doc["decay_constant"] = report.decayConstant;
    doc["threshold"] = report.threshold;
    doc["below_threshold"] = report.belowThreshold;
    doc["nonincreasing"] = report.nonincreasing;
    doc["buckets"] = bucketsJson(report.buckets);
    doc["metadata"] = {
        {"ratio", "sup of |f(y) - f(x) - A(x)(y - x)| / |x - y| per dyadic distance bucket"},
        {"decay_test", "smallest ratio <= decay_constant * smallest bucket upper edge; ratios nonincreasing over the three smallest buckets"},
    };
    return doc;
}

Json flatness(const FlatnessReport& flat, const DeterminedSubspace* subspace,
              const StabilityReport* stability) {
    Json doc = envelope("flatness", true);
    doc["center"] = flat.center;
    doc["radius"] = flat.radius;
    doc["neighbors"] = flat.neighbors;
    doc["singular_values"] = flat.singularValues;
    doc["thin_direction"] = flat.thinDirection;
    doc["flatness_score"] = flat.flatnessScore;
    doc["slack"] = flat.slack;
    doc["approximately_flat"] = flat.approximatelyFlat;
    if (subspace) {
        Json s;
        s["dimension"] = subspace->dimension;
        s["basis"] = subspace->basis;
        s["relative_singular_values"] = subspace->relativeSingularValues;
        s["differential"] = subspace->differential;
        doc["determined_subspace"] = std::move(s);
    }
    if (stability) {
        Json s;
        s["unique"] = stability->unique;
        if (stability->unique) {
            s["condition_number"] = stability->conditionNumber;
        } else {
            s["signal"] = "nonunique";
        }
        s["rank_tolerance"] = stability->rankTol;
        doc["stability"] = std::move(s);
    }
    doc["metadata"] = {
        {"flatness_proxy", "smallest / largest singular value of the mean-centered neighborhood divided by the radius"},
        {"stability_proxy", "condition number of the matrix of (w - x) / radius over the ball"},
    };
    return doc;
}

Json cliffordCheck(const LinearCliffordMap& map, const MonogenicCheck& left, const MonogenicCheck& right,
                   const std::string& side) {
    bool passed = false;
    if (side == "left") {
        passed = left.passed;
    } else if (side == "right") {
        passed = right.passed;
    } else {
        passed = left.passed || right.passed;
    }
    Json doc = envelope("clifford check", passed);
    doc["dim"] = map.dim;
    doc["side"] = side;
    doc["left_defect"] = left.defect;
    doc["left_monogenic"] = left.passed;
    doc["right_defect"] = right.defect;
    doc["right_monogenic"] = right.passed;
    return doc;
}

Json cliffordComplete(const LinearCliffordMap& map, const MonogenicCheck& check) {
    Json doc = envelope("clifford complete", check.passed);
    doc["side"] = check.side == Side::Left ? "left" : "right";
    doc["defect"] = check.defect;
    doc["map"] = io::toJson(map);
    return doc;
}

Json cliffordDimension(std::size_t dim, std::size_t dimension) {
    Json doc = envelope("clifford dimension", dimension == (dim - 1) * (std::size_t{1} << dim));
    doc["dim"] = dim;
    doc["monogenic_dimension"] = dimension;
    doc["expected"] = (dim - 1) * (std::size_t{1} << dim);
    return doc;
}

Json graphDerivative(const GraphDerivativeReport& report) {
    Json doc = envelope("graph-derivative", report.passed);
    doc["step"] = report.step;
    doc["lipschitz_constant"] = report.lipschitzConstant;
    doc["max_residual"] = report.maxResidual;
    doc["worst_node"] = report.worstNode;
    doc["curvature_constant"] = report.curvatureConstant;
    doc["bound"] = report.bound;
    doc["nodes"] = report.nodes;
    doc["residuals"] = report.residuals;
    return doc;
}

std::string formatNumber(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

std::string pairsCsv(const std::vector<RemainderPair>& pairs) {
    std::string out = "dist,remainder,bound\n";
    for (const auto& p : pairs) {
        out += formatNumber(p.distance);
        out += ',';
        out += formatNumber(p.remainder);
        out += ',';
        out += formatNumber(p.bound);
        out += '\n';
    }
    return out;
}

} // namespace qcalc::reports
