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

#include "qcalc/qcalc.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "qcalc/calculus.hpp"
#include "qcalc/clifford.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/io.hpp"
#include "qcalc/metric.hpp"
#include "qcalc/reports.hpp"
#include "qcalc/whitney.hpp"

struct qcalc_set {
    qcalc::SetSample sample;
};

struct qcalc_field {
    qcalc::io::AnyScalarField field;
};

struct qcalc_covectors {
    qcalc::io::AnyCovectorField field;
};

struct qcalc_report {
    std::string json;
    std::optional<std::string> csv;
    bool passed = false;
};

namespace {

thread_local std::string lastError;

qcalc_status fail(qcalc_status status, std::string message) {
    lastError = std::move(message);
    return status;
}

// Runs body, translating exceptions into status codes.
template<typename Body>
qcalc_status guarded(Body&& body) {
    lastError.clear();
    try {
        body();
        return QCALC_OK;
    } catch (const qcalc::ParseError& e) {
        return fail(QCALC_ERR_PARSE, e.what());
    } catch (const qcalc::ResourceLimit& e) {
        return fail(QCALC_ERR_RESOURCE_LIMIT, e.what());
    } catch (const qcalc::Disconnected& e) {
        return fail(QCALC_ERR_DISCONNECTED, e.what());
    } catch (const qcalc::Underdetermined& e) {
        return fail(QCALC_ERR_UNDERDETERMINED, e.what());
    } catch (const qcalc::Undersampled& e) {
        return fail(QCALC_ERR_UNDERSAMPLED, e.what());
    } catch (const qcalc::SetMismatch& e) {
        return fail(QCALC_ERR_SET_MISMATCH, e.what());
    } catch (const qcalc::InvalidArgument& e) {
        return fail(QCALC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(QCALC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QCALC_ERR_INTERNAL, "unknown error");
    }
}

void require(const void* p, const char* what) {
    if (p == nullptr) {
        throw qcalc::InvalidArgument(std::string(what) + " is null");
    }
}

qcalc_tolerances tolerancesOrDefault(const qcalc_tolerances* tol) {
    qcalc_tolerances t;
    if (tol) {
        t = *tol;
    } else {
        qcalc_tolerances_default(&t);
    }
    return t;
}

char* copyString(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(qcalc_report** out, const qcalc::io::Json& doc, std::optional<std::string> csv = std::nullopt) {
    require(out, "report output");
    auto report = std::make_unique<qcalc_report>();
    report->json = qcalc::io::dump(doc);
    report->passed = doc.at("status") == "pass";
    report->csv = std::move(csv);
    *out = report.release();
}

const qcalc::ScalarField& realField(const qcalc_field* f) {
    require(f, "field");
    if (auto p = std::get_if<qcalc::ScalarField>(&f->field)) {
        return *p;
    }
    throw qcalc::InvalidArgument("expected a real scalar field, got a complex one");
}

const qcalc::ComplexScalarField& complexField(const qcalc_field* f) {
    require(f, "field");
    if (auto p = std::get_if<qcalc::ComplexScalarField>(&f->field)) {
        return *p;
    }
    throw qcalc::InvalidArgument("expected a complex scalar field, got a real one");
}

const qcalc::CovectorField& realCovectors(const qcalc_covectors* a) {
    require(a, "covector field");
    if (auto p = std::get_if<qcalc::CovectorField>(&a->field)) {
        return *p;
    }
    throw qcalc::InvalidArgument("expected a real covector field, got a complex-linear one");
}

const qcalc::ComplexCovectorField& complexCovectors(const qcalc_covectors* a) {
    require(a, "covector field");
    if (auto p = std::get_if<qcalc::ComplexCovectorField>(&a->field)) {
        return *p;
    }
    throw qcalc::InvalidArgument("expected a complex-linear covector field, got a real one");
}

const qcalc::SetSample& sampleOf(const qcalc_set* set) {
    require(set, "set");
    return set->sample;
}

double resolveK(const qcalc::SetSample& sample, double k) {
    return k > 0.0 ? k : qcalc::estimateChordArc(sample).kHat;
}

void storeSet(qcalc_set** out, qcalc::SetSample sample) {
    require(out, "set output");
    *out = new qcalc_set{std::move(sample)};
}

} // namespace

extern "C" {

const char* qcalc_version(void) {
    return "0.1.0";
}

const char* qcalc_status_string(qcalc_status status) {
    switch (status) {
    case QCALC_OK:
        return "ok";
    case QCALC_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case QCALC_ERR_PARSE:
        return "parse error";
    case QCALC_ERR_RESOURCE_LIMIT:
        return "resource limit";
    case QCALC_ERR_DISCONNECTED:
        return "disconnected";
    case QCALC_ERR_UNDERDETERMINED:
        return "underdetermined neighborhood";
    case QCALC_ERR_UNDERSAMPLED:
        return "undersampled";
    case QCALC_ERR_SET_MISMATCH:
        return "set mismatch";
    case QCALC_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char* qcalc_last_error(void) {
    return lastError.c_str();
}

void qcalc_tolerances_default(qcalc_tolerances* tol) {
    if (!tol) {
        return;
    }
    tol->absolute = 1e-9;
    tol->validate = 1e-12;
    tol->monogenic = 1e-12;
    tol->flat = 1e-6;
    tol->rank = 1e-12;
    tol->ftc = 1e-12;
    tol->curvature = 1.0;
    tol->decay = 1.0;
}

qcalc_status qcalc_tolerances_set(qcalc_tolerances* tol, const char* name, double value) {
    return guarded([&] {
        require(tol, "tolerances");
        require(name, "tolerance name");
        const std::string key(name);
        double* slot = nullptr;
        if (key == "abs") {
            slot = &tol->absolute;
        } else if (key == "validate") {
            slot = &tol->validate;
        } else if (key == "monogenic") {
            slot = &tol->monogenic;
        } else if (key == "flat") {
            slot = &tol->flat;
        } else if (key == "rank") {
            slot = &tol->rank;
        } else if (key == "ftc") {
            slot = &tol->ftc;
        } else if (key == "curvature") {
            slot = &tol->curvature;
        } else if (key == "decay") {
            slot = &tol->decay;
        } else {
            throw qcalc::InvalidArgument("unknown tolerance name \"" + key + "\"");
        }
        if (!(value >= 0.0) || !std::isfinite(value)) {
            throw qcalc::InvalidArgument("tolerance \"" + key + "\" must be a nonnegative number");
        }
        *slot = value;
    });
}

void qcalc_string_free(char* text) {
    std::free(text);
}

// ---- sets

qcalc_status qcalc_set_build_polyline(const double* coords, size_t point_count, size_t dim, qcalc_set** out) {
    return guarded([&] {
        require(coords, "coordinates");
        storeSet(out, qcalc::buildPolyline(dim, std::span<const double>(coords, point_count * dim)));
    });
}

qcalc_status qcalc_set_build_gasket(unsigned level, unsigned cap, qcalc_set** out) {
    return guarded([&] {
        qcalc::BuildLimits limits;
        if (cap > 0) {
            limits.gasketLevelCap = cap;
        }
        storeSet(out, qcalc::buildGasket(level, limits));
    });
}

qcalc_status qcalc_set_build_carpet(unsigned level, unsigned cap, qcalc_set** out) {
    return guarded([&] {
        qcalc::BuildLimits limits;
        if (cap > 0) {
            limits.carpetLevelCap = cap;
        }
        storeSet(out, qcalc::buildCarpet(level, limits));
    });
}

qcalc_status qcalc_set_build_graph(const double* slopes, size_t slope_count, double grid_step, double span_lo,
                                   double span_hi, qcalc_set** out) {
    return guarded([&] {
        require(slopes, "slopes");
        storeSet(out, qcalc::buildLipschitzGraph(std::span<const double>(slopes, slope_count), grid_step,
                                                 span_lo, span_hi)
                          .sample);
    });
}

qcalc_status qcalc_set_build_dumbbell(double bubble_radius, double neck_width, double step, qcalc_set** out) {
    return guarded([&] { storeSet(out, qcalc::buildDumbbell(bubble_radius, neck_width, step).sample); });
}

qcalc_status qcalc_set_parse(const char* json, qcalc_set** out) {
    return guarded([&] {
        require(json, "json");
        storeSet(out, qcalc::io::setFromJson(qcalc::io::parse(json, "<set>")));
    });
}

qcalc_status qcalc_set_load(const char* path, qcalc_set** out) {
    return guarded([&] {
        require(path, "path");
        try {
            storeSet(out, qcalc::io::setFromJson(qcalc::io::readFile(path)));
        } catch (const qcalc::ParseError& e) {
            const std::string what = e.what();
            throw qcalc::ParseError(what.rfind(path, 0) == 0 ? what : std::string(path) + ": " + what);
        }
    });
}

qcalc_status qcalc_set_serialize(const qcalc_set* set, char** json) {
    return guarded([&] {
        require(json, "json output");
        *json = copyString(qcalc::io::dump(qcalc::io::toJson(sampleOf(set))));
    });
}

size_t qcalc_set_point_count(const qcalc_set* set) {
    return set ? set->sample.pointCount() : 0;
}

size_t qcalc_set_edge_count(const qcalc_set* set) {
    return set ? set->sample.edgeCount() : 0;
}

size_t qcalc_set_ambient_dim(const qcalc_set* set) {
    return set ? set->sample.ambientDim() : 0;
}

qcalc_status qcalc_set_point(const qcalc_set* set, size_t i, double* coords) {
    return guarded([&] {
        const auto& sample = sampleOf(set);
        require(coords, "coordinate output");
        if (i >= sample.pointCount()) {
            throw qcalc::InvalidArgument("point index out of range");
        }
        const auto p = sample.point(i);
        std::copy(p.begin(), p.end(), coords);
    });
}

qcalc_status qcalc_set_fingerprint(const qcalc_set* set, char* buffer, size_t size) {
    return guarded([&] {
        const auto& id = sampleOf(set).fingerprint();
        require(buffer, "buffer");
        if (size < id.size() + 1) {
            throw qcalc::InvalidArgument("fingerprint buffer needs 17 bytes");
        }
        std::memcpy(buffer, id.c_str(), id.size() + 1);
    });
}

qcalc_status qcalc_set_validate(const qcalc_set* set, const qcalc_tolerances* tol, qcalc_report** out) {
    return guarded([&] {
        const auto t = tolerancesOrDefault(tol);
        const auto& sample = sampleOf(set);
        emit(out, qcalc::reports::validation(sample, qcalc::validate(sample, t.validate)));
    });
}

void qcalc_set_free(qcalc_set* set) {
    delete set;
}

// ---- fields

qcalc_status qcalc_field_from_values(const qcalc_set* set, const double* values, qcalc_field** out) {
    return guarded([&] {
        const auto& sample = sampleOf(set);
        require(values, "values");
        require(out, "field output");
        qcalc::ScalarField f{sample.fingerprint(), {values, values + sample.pointCount()}};
        qcalc::checkField(sample, f);
        *out = new qcalc_field{std::move(f)};
    });
}

qcalc_status qcalc_field_from_complex(const qcalc_set* set, const double* values, qcalc_field** out) {
    return guarded([&] {
        const auto& sample = sampleOf(set);
        require(values, "values");
        require(out, "field output");
        qcalc::ComplexScalarField f{sample.fingerprint(), {}};
        for (std::size_t i = 0; i < sample.pointCount(); ++i) {
            f.values.emplace_back(values[2 * i], values[2 * i + 1]);
        }
        qcalc::checkField(sample, f);
        *out = new qcalc_field{std::move(f)};
    });
}

qcalc_status qcalc_field_parse(const char* json, qcalc_field** out) {
    return guarded([&] {
        require(json, "json");
        require(out, "field output");
        *out = new qcalc_field{qcalc::io::scalarFieldFromJson(qcalc::io::parse(json, "<field>"))};
    });
}

qcalc_status qcalc_field_load(const char* path, qcalc_field** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "field output");
        try {
            *out = new qcalc_field{qcalc::io::scalarFieldFromJson(qcalc::io::readFile(path))};
        } catch (const qcalc::ParseError& e) {
            const std::string what = e.what();
            throw qcalc::ParseError(what.rfind(path, 0) == 0 ? what : std::string(path) + ": " + what);
        }
    });
}

qcalc_status qcalc_field_serialize(const qcalc_field* field, char** json) {
    return guarded([&] {
        require(field, "field");
        require(json, "json output");
        std::visit([&](const auto& f) { *json = copyString(qcalc::io::dump(qcalc::io::toJson(f))); }, field->field);
    });
}

int qcalc_field_is_complex(const qcalc_field* field) {
    return field && std::holds_alternative<qcalc::ComplexScalarField>(field->field) ? 1 : 0;
}

size_t qcalc_field_size(const qcalc_field* field) {
    if (!field) {
        return 0;
    }
    return std::visit([](const auto& f) { return f.values.size(); }, field->field);
}

double qcalc_field_value(const qcalc_field* field, size_t i) {
    if (!field || i >= qcalc_field_size(field)) {
        return 0.0;
    }
    if (auto p = std::get_if<qcalc::ScalarField>(&field->field)) {
        return p->values[i];
    }
    return std::get<qcalc::ComplexScalarField>(field->field).values[i].real();
}

void qcalc_field_free(qcalc_field* field) {
    delete field;
}

qcalc_status qcalc_covectors_from_values(const qcalc_set* set, const double* covectors, qcalc_covectors** out) {
    return guarded([&] {
        const auto& sample = sampleOf(set);
        require(covectors, "covectors");
        require(out, "covector output");
        qcalc::CovectorField a{sample.fingerprint(), sample.ambientDim(),
                               {covectors, covectors + sample.pointCount() * sample.ambientDim()}};
        qcalc::checkField(sample, a);
        *out = new qcalc_covectors{std::move(a)};
    });
}

qcalc_status qcalc_covectors_from_complex(const qcalc_set* set, const double* values, qcalc_covectors** out) {
    return guarded([&] {
        const auto& sample = sampleOf(set);
        require(values, "values");
        require(out, "covector output");
        qcalc::ComplexCovectorField a{sample.fingerprint(), {}};
        for (std::size_t i = 0; i < sample.pointCount(); ++i) {
            a.values.emplace_back(values[2 * i], values[2 * i + 1]);
        }
        qcalc::checkField(sample, a);
        *out = new qcalc_covectors{std::move(a)};
    });
}

qcalc_status qcalc_covectors_parse(const char* json, qcalc_covectors** out) {
    return guarded([&] {
        require(json, "json");
        require(out, "covector output");
        *out = new qcalc_covectors{qcalc::io::covectorFieldFromJson(qcalc::io::parse(json, "<covectors>"))};
    });
}

qcalc_status qcalc_covectors_load(const char* path, qcalc_covectors** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "covector output");
        try {
            *out = new qcalc_covectors{qcalc::io::covectorFieldFromJson(qcalc::io::readFile(path))};
        } catch (const qcalc::ParseError& e) {
            const std::string what = e.what();
            throw qcalc::ParseError(what.rfind(path, 0) == 0 ? what : std::string(path) + ": " + what);
        }
    });
}

qcalc_status qcalc_covectors_serialize(const qcalc_covectors* covectors, char** json) {
    return guarded([&] {
        require(covectors, "covectors");
        require(json, "json output");
        std::visit([&](const auto& a) { *json = copyString(qcalc::io::dump(qcalc::io::toJson(a))); },
                   covectors->field);
    });
}

void qcalc_covectors_free(qcalc_covectors* covectors) {
    delete covectors;
}

// ---- metric

qcalc_status qcalc_k_estimate(const qcalc_set* set, int exhaustive, uint64_t pair_budget, uint64_t seed,
                              qcalc_report** out) {
    return guarded([&] {
        qcalc::ChordArcOptions options;
        options.method = exhaustive ? qcalc::ChordArcMethod::Exhaustive : qcalc::ChordArcMethod::Sampled;
        options.pairBudget = pair_budget;
        options.seed = seed;
        emit(out, qcalc::reports::chordArc(qcalc::estimateChordArc(sampleOf(set), options)));
    });
}

qcalc_status qcalc_geodesic(const qcalc_set* set, size_t i, size_t j, double* distance, qcalc_report** out) {
    return guarded([&] {
        const auto& sample = sampleOf(set);
        const double d = qcalc::geodesicDistance(sample, i, j);
        const auto path = qcalc::shortestPath(sample, i, j);
        if (distance) {
            *distance = d;
        }
        if (out) {
            emit(out, qcalc::reports::geodesic(i, j, d, path));
        }
    });
}

qcalc_status qcalc_local_to_global(const qcalc_set* set, const qcalc_field* f, double radius,
                                   double local_constant, double k, const qcalc_tolerances* tol,
                                   qcalc_report** out) {
    return guarded([&] {
        const auto t = tolerancesOrDefault(tol);
        const auto& sample = sampleOf(set);
        const auto& field = realField(f);
        const double r = radius > 0.0 ? radius : 2.0 * sample.maxEdgeLength();
        const double c = local_constant >= 0.0 ? local_constant : qcalc::localLipschitzConstant(sample, field, r);
        emit(out, qcalc::reports::localToGlobal(
                      qcalc::verifyLocalToGlobal(sample, field, r, c, resolveK(sample, k), t.absolute)));
    });
}

// ---- calculus

qcalc_status qcalc_ftc(const qcalc_set* set, const qcalc_field* f, const qcalc_covectors* a, size_t from,
                       size_t to, unsigned midpoint_subdivisions, const qcalc_tolerances* tol,
                       qcalc_report** out) {
    return guarded([&] {
        const auto t = tolerancesOrDefault(tol);
        const auto& sample = sampleOf(set);
        const auto& field = realField(f);
        const auto& covectors = realCovectors(a);
        qcalc::checkField(sample, field);
        qcalc::checkField(sample, covectors);
        const auto path = qcalc::shortestPath(sample, from, to);
        const auto rule = midpoint_subdivisions > 0 ? qcalc::Quadrature::midpoint(midpoint_subdivisions)
                                                    : qcalc::Quadrature::trapezoid();
        const double integral = qcalc::pathIntegral(sample, covectors, path, rule);
        const double change = field.values[to] - field.values[from];
        const double residual = qcalc::verifyFtc(sample, field, covectors, path, rule);
        emit(out, qcalc::reports::ftc(from, to, integral, change, residual, path, t.ftc));
    });
}

qcalc_status qcalc_loop_defect(const qcalc_set* set, const qcalc_covectors* a, const size_t* cycle,
                               size_t cycle_length, double* defect) {
    return guarded([&] {
        const auto& sample = sampleOf(set);
        require(cycle, "cycle");
        require(defect, "defect output");
        const auto path = qcalc::makePath(sample, std::vector<std::size_t>(cycle, cycle + cycle_length));
        *defect = qcalc::loopDefect(sample, realCovectors(a), path);
    });
}

qcalc_status qcalc_reconstruct(const qcalc_set* set, const qcalc_covectors* a, size_t basepoint,
                               double base_value, const qcalc_tolerances* tol, qcalc_report** out,
                               qcalc_field** field) {
    return guarded([&] {
        const auto t = tolerancesOrDefault(tol);
        auto result = qcalc::reconstruct(sampleOf(set), realCovectors(a), basepoint, base_value, t.absolute);
        if (out) {
            emit(out, qcalc::reports::reconstruction(result, t.absolute));
        }
        if (field) {
            *field = new qcalc_field{std::move(result.field)};
        }
    });
}

qcalc_status qcalc_remainder_check(const qcalc_set* set, const qcalc_field* f, const qcalc_covectors* a,
                                   double k, size_t max_listed, int with_csv, const qcalc_tolerances* tol,
                                   qcalc_report** out) {
    return guarded([&] {
        const auto t = tolerancesOrDefault(tol);
        const auto& sample = sampleOf(set);
        const auto report = qcalc::verifyRemainderBound(sample, realField(f), realCovectors(a),
                                                        resolveK(sample, k), t.absolute, with_csv != 0);
        std::optional<std::string> csv;
        if (with_csv) {
            csv = qcalc::reports::pairsCsv(report.pairs);
        }
        emit(out, qcalc::reports::remainderBound(report, max_listed), std::move(csv));
    });
}

qcalc_status qcalc_holder_fit(const qcalc_set* set, const qcalc_field* f, const qcalc_covectors* a, double k,
                              qcalc_report** out) {
    return guarded([&] {
        const auto& sample = sampleOf(set);
        emit(out, qcalc::reports::holderFit(
                      qcalc::fitHolderModulus(sample, realField(f), realCovectors(a), resolveK(sample, k))));
    });
}

qcalc_status qcalc_affine_rigidity(const qcalc_set* set, const qcalc_field* f, const qcalc_covectors* a,
                                   const qcalc_tolerances* tol, qcalc_report** out) {
    return guarded([&] {
        const auto t = tolerancesOrDefault(tol);
        const auto r = qcalc::affineRigidityTest(sampleOf(set), realField(f), realCovectors(a), t.absolute,
                                                 t.absolute);
        auto doc = qcalc::reports::envelope("affine-rigidity", r.passed);
        doc["trivial"] = r.trivial;
        doc["hypothesis_holds"] = r.hypothesisHolds;
        doc["spread"] = r.spread;
        doc["intercept"] = r.intercept;
        doc["gradient"] = r.gradient;
        doc["max_residual"] = r.maxResidual;
        emit(out, doc);
    });
}

// ---- whitney

qcalc_status qcalc_whitney(const qcalc_set* set, const qcalc_field* f, const qcalc_covectors* a,
                           size_t max_buckets, const qcalc_tolerances* tol, qcalc_report** out) {
    return guarded([&] {
        const auto t = tolerancesOrDefault(tol);
        emit(out, qcalc::reports::whitneyC1(qcalc::checkWhitneyC1(sampleOf(set), realField(f), realCovectors(a),
                                                                  max_buckets, t.decay, t.absolute)));
    });
}

qcalc_status qcalc_flatness(const qcalc_set* set, const qcalc_field* f, size_t index, double radius,
                            const qcalc_tolerances* tol, qcalc_report** out) {
    return guarded([&] {
        const auto t = tolerancesOrDefault(tol);
        const auto& sample = sampleOf(set);
        const auto flat = qcalc::localFlatness(sample, index, radius, t.flat);
        // Without a field the geometry alone decides; zeros stand in for f.
        qcalc::ScalarField zero{sample.fingerprint(), std::vector<double>(sample.pointCount(), 0.0)};
        const auto& field = f ? realField(f) : zero;
        const auto subspace = qcalc::determinedSubspace(sample, field, index, radius, t.flat);
        const auto stability = qcalc::differentialStability(sample, field, index, radius, t.rank);
        emit(out, qcalc::reports::flatness(flat, &subspace, &stability));
    });
}

// ---- clifford

qcalc_status qcalc_clifford_check(const char* columns_json, qcalc_side side, const qcalc_tolerances* tol,
                                  qcalc_report** out) {
    return guarded([&] {
        require(columns_json, "columns json");
        const auto t = tolerancesOrDefault(tol);
        auto list = qcalc::io::columnsFromJson(qcalc::io::parse(columns_json, "<columns>"));
        qcalc::LinearCliffordMap map{list.dim, std::move(list.columns)};
        const auto left = qcalc::isLeftMonogenic(map, t.monogenic);
        const auto right = qcalc::isRightMonogenic(map, t.monogenic);
        const char* name = side == QCALC_SIDE_LEFT ? "left" : side == QCALC_SIDE_RIGHT ? "right" : "either";
        emit(out, qcalc::reports::cliffordCheck(map, left, right, name));
    });
}

qcalc_status qcalc_clifford_complete(const char* partial_json, size_t dim, qcalc_side side,
                                     const qcalc_tolerances* tol, qcalc_report** out) {
    return guarded([&] {
        require(partial_json, "partial json");
        if (side != QCALC_SIDE_LEFT && side != QCALC_SIDE_RIGHT) {
            throw qcalc::InvalidArgument("completion needs side left or right");
        }
        const auto t = tolerancesOrDefault(tol);
        auto list = qcalc::io::columnsFromJson(qcalc::io::parse(partial_json, "<partial>"));
        if (dim != 0 && dim != list.dim) {
            throw qcalc::InvalidArgument("--dim " + std::to_string(dim) + " differs from the partial columns' dim " +
                                         std::to_string(list.dim));
        }
        const auto s = side == QCALC_SIDE_LEFT ? qcalc::Side::Left : qcalc::Side::Right;
        const auto map = qcalc::completeFromHyperplane(list.dim, list.columns, s);
        const auto check = s == qcalc::Side::Left ? qcalc::isLeftMonogenic(map, t.monogenic)
                                                  : qcalc::isRightMonogenic(map, t.monogenic);
        emit(out, qcalc::reports::cliffordComplete(map, check));
    });
}

qcalc_status qcalc_clifford_dimension(size_t dim, size_t* dimension, qcalc_report** out) {
    return guarded([&] {
        const std::size_t value = qcalc::monogenicSpaceDimension(dim);
        if (dimension) {
            *dimension = value;
        }
        if (out) {
            emit(out, qcalc::reports::cliffordDimension(dim, value));
        }
    });
}

qcalc_status qcalc_clifford_product(const char* a_json, const char* b_json, char** product_json) {
    return guarded([&] {
        require(a_json, "left operand");
        require(b_json, "right operand");
        require(product_json, "product output");
        const auto a = qcalc::io::multivectorFromJson(qcalc::io::parse(a_json, "<a>"));
        const auto b = qcalc::io::multivectorFromJson(qcalc::io::parse(b_json, "<b>"));
        *product_json = copyString(qcalc::io::dump(qcalc::io::toJson(a * b)));
    });
}

qcalc_status qcalc_graph_derivative(const qcalc_set* set, const qcalc_field* f, const qcalc_covectors* a,
                                    const qcalc_tolerances* tol, qcalc_report** out) {
    return guarded([&] {
        const auto t = tolerancesOrDefault(tol);
        emit(out, qcalc::reports::graphDerivative(qcalc::tangentialDerivativeOnGraph(
                      sampleOf(set), complexField(f), complexCovectors(a), t.curvature, t.ftc)));
    });
}

// ---- reports

const char* qcalc_report_json(const qcalc_report* report) {
    return report ? report->json.c_str() : nullptr;
}

const char* qcalc_report_csv(const qcalc_report* report) {
    return report && report->csv ? report->csv->c_str() : nullptr;
}

int qcalc_report_passed(const qcalc_report* report) {
    return report && report->passed ? 1 : 0;
}

void qcalc_report_free(qcalc_report* report) {
    delete report;
}

} // extern "C"
