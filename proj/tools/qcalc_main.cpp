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

// qcalc command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcalc/qcalc.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(qcalc_status status) {
    if (status != QCALC_OK) {
        throw UsageError(std::string(qcalc_status_string(status)) + ": " + qcalc_last_error());
    }
}

// Minimal owning wrapper over the C handles.
template<typename T, void (*Free)(T*)>
class Handle {
public:
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() {
        if (p_) {
            Free(p_);
        }
    }
    T** out() { return &p_; }
    T* get() const { return p_; }
    explicit operator bool() const { return p_ != nullptr; }

private:
    T* p_ = nullptr;
};

using SetHandle = Handle<qcalc_set, qcalc_set_free>;
using FieldHandle = Handle<qcalc_field, qcalc_field_free>;
using CovectorHandle = Handle<qcalc_covectors, qcalc_covectors_free>;
using ReportHandle = Handle<qcalc_report, qcalc_report_free>;

std::string takeString(char* s) {
    std::string out(s);
    qcalc_string_free(s);
    return out;
}

std::string readText(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError(path + ": cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void writeText(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw UsageError(path + ": cannot write file");
    }
}

// Parse errors from in-memory text carry a placeholder source; name the file.
void checkFile(qcalc_status status, const std::string& path) {
    if (status != QCALC_OK) {
        std::string message = qcalc_last_error();
        if (message.rfind(path, 0) != 0) {
            message = path + ": " + message;
        }
        throw UsageError(std::string(qcalc_status_string(status)) + ": " + message);
    }
}

struct Globals {
    std::uint64_t seed = 0;
    std::vector<std::string> tolerances;
    std::string out;
    std::string csv;
    qcalc_tolerances tol{};

    void resolve() {
        qcalc_tolerances_default(&tol);
        for (const auto& item : tolerances) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) {
                throw UsageError("--tol expects NAME=VALUE, got \"" + item + "\"");
            }
            double value = 0.0;
            try {
                std::size_t used = 0;
                value = std::stod(item.substr(eq + 1), &used);
                if (used != item.size() - eq - 1) {
                    throw std::invalid_argument("trailing characters");
                }
            } catch (const std::exception&) {
                throw UsageError("--tol " + item + ": value is not a number");
            }
            check(qcalc_tolerances_set(&tol, item.substr(0, eq).c_str(), value));
        }
    }
};

struct Inputs {
    std::string set;
    std::string field;
    std::string covectors;

    void load(SetHandle& s, FieldHandle* f, CovectorHandle* a) const {
        checkFile(qcalc_set_load(set.c_str(), s.out()), set);
        if (f && !field.empty()) {
            checkFile(qcalc_field_load(field.c_str(), f->out()), field);
        }
        if (a && !covectors.empty()) {
            checkFile(qcalc_covectors_load(covectors.c_str(), a->out()), covectors);
        }
    }
};

// Writes the report, plus its CSV attachment when asked for, and maps the
// verdict to an exit code.
int finish(const Globals& g, const ReportHandle& report) {
    const std::string json = qcalc_report_json(report.get());
    if (g.out.empty()) {
        std::cout << json;
        std::cout.flush();
    } else {
        writeText(g.out, json);
    }
    if (!g.csv.empty()) {
        const char* csv = qcalc_report_csv(report.get());
        if (!csv) {
            throw UsageError("--csv: this command produces no pair data");
        }
        writeText(g.csv, csv);
    }
    return qcalc_report_passed(report.get()) ? kExitPass : kExitFail;
}

std::vector<double> parseNumbers(const std::string& text, const char* what) {
    std::vector<double> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(token, &used));
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": \"" + token + "\" is not a number");
        }
    }
    return out;
}

qcalc_side parseSide(const std::string& side) {
    if (side == "left") {
        return QCALC_SIDE_LEFT;
    }
    if (side == "right") {
        return QCALC_SIDE_RIGHT;
    }
    return QCALC_SIDE_EITHER;
}

int emitSet(const Globals& g, const SetHandle& set, const std::string& kind) {
    const std::string json = takeString([&] {
        char* s = nullptr;
        check(qcalc_set_serialize(set.get(), &s));
        return s;
    }());
    if (g.out.empty()) {
        std::cout << json;
        return kExitPass;
    }
    writeText(g.out, json);
    char id[17];
    check(qcalc_set_fingerprint(set.get(), id, sizeof id));
    Json summary;
    summary["schema"] = "qcalc.report/1";
    summary["command"] = "build";
    summary["status"] = "pass";
    summary["kind"] = kind;
    summary["set"] = id;
    summary["points"] = qcalc_set_point_count(set.get());
    summary["edges"] = qcalc_set_edge_count(set.get());
    summary["path"] = g.out;
    std::cout << summary.dump(2) << "\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qcalc: calculus on discretized chord-arc sets"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(qcalc_version()));

    Globals g;
    app.add_option("--seed", g.seed, "Seed for every random choice")->default_val(0);
    app.add_option("--tol", g.tolerances,
                   "Tolerance override NAME=VALUE (abs, validate, monogenic, flat, rank, ftc, curvature, decay)");
    app.add_option("--out", g.out, "Write the report (or built set) here instead of stdout");
    app.add_option("--csv", g.csv, "Write pair data as CSV (remainder-check)");

    std::function<int()> run;

    // build
    auto* build = app.add_subcommand("build", "Build a sample set")->require_subcommand(1);
    unsigned level = 0;
    unsigned cap = 0;
    for (const char* kind : {"gasket", "carpet"}) {
        auto* sub = build->add_subcommand(kind, std::string("Sierpinski ") + kind + " graph");
        sub->add_option("--level", level, "Refinement level")->required();
        sub->add_option("--cap", cap, "Level cap (0 = default)");
        const std::string name = kind;
        sub->callback([&, name] {
            run = [&, name] {
                SetHandle set;
                check(name == "gasket" ? qcalc_set_build_gasket(level, cap, set.out())
                                       : qcalc_set_build_carpet(level, cap, set.out()));
                return emitSet(g, set, name);
            };
        });
    }
    std::string coords;
    std::size_t polyDim = 2;
    auto* polyline = build->add_subcommand("polyline", "Polyline through the given points");
    polyline->add_option("--coords", coords, "Flat comma-separated coordinates")->required();
    polyline->add_option("--dim", polyDim, "Ambient dimension")->default_val(2);
    polyline->callback([&] {
        run = [&] {
            const auto values = parseNumbers(coords, "--coords");
            if (polyDim == 0 || values.size() % polyDim != 0) {
                throw UsageError("--coords: count is not a multiple of --dim");
            }
            SetHandle set;
            check(qcalc_set_build_polyline(values.data(), values.size() / polyDim, polyDim, set.out()));
            return emitSet(g, set, "polyline");
        };
    });
    std::string slopes;
    double gridStep = 0.0;
    double spanLo = 0.0;
    double spanHi = 1.0;
    auto* graph = build->add_subcommand("graph", "Graph of a piecewise-linear function over [lo, hi]");
    graph->add_option("--slopes", slopes, "Comma-separated slopes of equal-width pieces")->required();
    graph->add_option("--step", gridStep, "Grid step")->required();
    graph->add_option("--lo", spanLo, "Left end")->default_val(0.0);
    graph->add_option("--hi", spanHi, "Right end")->default_val(1.0);
    graph->callback([&] {
        run = [&] {
            const auto s = parseNumbers(slopes, "--slopes");
            SetHandle set;
            check(qcalc_set_build_graph(s.data(), s.size(), gridStep, spanLo, spanHi, set.out()));
            return emitSet(g, set, "graph");
        };
    });
    double bubble = 1.0;
    double neck = 0.1;
    double bellStep = 0.1;
    auto* dumbbell = build->add_subcommand("dumbbell", "Two circles joined by a straight neck");
    dumbbell->add_option("--radius", bubble, "Bubble radius")->default_val(1.0);
    dumbbell->add_option("--neck", neck, "Neck width")->default_val(0.1);
    dumbbell->add_option("--step", bellStep, "Arc step")->default_val(0.1);
    dumbbell->callback([&] {
        run = [&] {
            SetHandle set;
            check(qcalc_set_build_dumbbell(bubble, neck, bellStep, set.out()));
            return emitSet(g, set, "dumbbell");
        };
    });

    Inputs in;

    // k-estimate
    auto* kEstimate = app.add_subcommand("k-estimate", "Estimate the chord-arc constant");
    kEstimate->add_option("set", in.set, "Set JSON")->required()->check(CLI::ExistingFile);
    bool exhaustive = false;
    std::uint64_t samples = 0;
    auto* exFlag = kEstimate->add_flag("--exhaustive", exhaustive, "Scan every pair (default)");
    kEstimate->add_option("--sample", samples, "Number of random pairs")->excludes(exFlag);
    kEstimate->callback([&] {
        run = [&] {
            SetHandle set;
            in.load(set, nullptr, nullptr);
            ReportHandle report;
            check(qcalc_k_estimate(set.get(), samples == 0 ? 1 : 0, samples, g.seed, report.out()));
            return finish(g, report);
        };
    });

    // geodesic
    auto* geodesic = app.add_subcommand("geodesic", "Shortest path between two vertices");
    std::size_t from = 0;
    std::size_t to = 0;
    std::string pathOut;
    geodesic->add_option("set", in.set, "Set JSON")->required()->check(CLI::ExistingFile);
    geodesic->add_option("i", from, "Start vertex")->required();
    geodesic->add_option("j", to, "End vertex")->required();
    geodesic->add_option("--path", pathOut, "Also write the vertex path as JSON");
    geodesic->callback([&] {
        run = [&] {
            SetHandle set;
            in.load(set, nullptr, nullptr);
            ReportHandle report;
            check(qcalc_geodesic(set.get(), from, to, nullptr, report.out()));
            if (!pathOut.empty()) {
                const Json doc = Json::parse(qcalc_report_json(report.get()));
                Json path;
                path["from"] = from;
                path["to"] = to;
                path["vertices"] = doc.at("path");
                path["length"] = doc.at("path_length");
                writeText(pathOut, path.dump(2) + "\n");
            }
            return finish(g, report);
        };
    });

    // local-to-global
    auto* l2g = app.add_subcommand("local-to-global", "Check that local Lipschitz bounds globalize with factor k");
    double radius = 0.0;
    double localC = -1.0;
    double kValue = 0.0;
    l2g->add_option("set", in.set, "Set JSON")->required()->check(CLI::ExistingFile);
    l2g->add_option("f", in.field, "Scalar field JSON")->required()->check(CLI::ExistingFile);
    l2g->add_option("--radius", radius, "Ball radius (default: twice the longest edge)");
    l2g->add_option("--local", localC, "Local constant C (default: measured)");
    l2g->add_option("--k", kValue, "Chord-arc constant (default: exhaustive k_hat)");
    l2g->callback([&] {
        run = [&] {
            SetHandle set;
            FieldHandle f;
            in.load(set, &f, nullptr);
            ReportHandle report;
            check(qcalc_local_to_global(set.get(), f.get(), radius, localC, kValue, &g.tol, report.out()));
            return finish(g, report);
        };
    });

    // ftc
    auto* ftc = app.add_subcommand("ftc", "Compare f(to) - f(from) with the integral of A along the geodesic");
    unsigned midpoint = 0;
    bool haveTo = false;
    ftc->add_option("set", in.set, "Set JSON")->required()->check(CLI::ExistingFile);
    ftc->add_option("f", in.field, "Scalar field JSON")->required()->check(CLI::ExistingFile);
    ftc->add_option("A", in.covectors, "Covector field JSON")->required()->check(CLI::ExistingFile);
    ftc->add_option("--from", from, "Start vertex")->default_val(0);
    auto* toOpt = ftc->add_option("--to", to, "End vertex (default: last)");
    ftc->add_option("--midpoint", midpoint, "Midpoint rule with this many subdivisions per edge (0 = trapezoid)");
    ftc->callback([&] {
        haveTo = toOpt->count() > 0;
        run = [&] {
            SetHandle set;
            FieldHandle f;
            CovectorHandle a;
            in.load(set, &f, &a);
            const std::size_t target = haveTo ? to : qcalc_set_point_count(set.get()) - 1;
            ReportHandle report;
            check(qcalc_ftc(set.get(), f.get(), a.get(), from, target, midpoint, &g.tol, report.out()));
            return finish(g, report);
        };
    });

    // reconstruct
    auto* rec = app.add_subcommand("reconstruct", "Recover f from A by path integration");
    std::size_t base = 0;
    double baseValue = 0.0;
    std::string fieldOut;
    rec->add_option("set", in.set, "Set JSON")->required()->check(CLI::ExistingFile);
    rec->add_option("A", in.covectors, "Covector field JSON")->required()->check(CLI::ExistingFile);
    rec->add_option("--base", base, "Basepoint vertex")->default_val(0);
    rec->add_option("--value", baseValue, "Value at the basepoint")->default_val(0.0);
    rec->add_option("--field-out", fieldOut, "Also write the reconstructed field JSON");
    rec->callback([&] {
        run = [&] {
            SetHandle set;
            CovectorHandle a;
            in.load(set, nullptr, &a);
            ReportHandle report;
            FieldHandle field;
            check(qcalc_reconstruct(set.get(), a.get(), base, baseValue, &g.tol, report.out(), field.out()));
            if (!fieldOut.empty()) {
                char* s = nullptr;
                check(qcalc_field_serialize(field.get(), &s));
                writeText(fieldOut, takeString(s));
            }
            return finish(g, report);
        };
    });

    // remainder-check
    auto* rem = app.add_subcommand("remainder-check", "Verify |f(y) - f(x) - A(x)(y - x)| <= k |x - y| osc A");
    std::size_t maxListed = 20;
    rem->add_option("set", in.set, "Set JSON")->required()->check(CLI::ExistingFile);
    rem->add_option("f", in.field, "Scalar field JSON")->required()->check(CLI::ExistingFile);
    rem->add_option("A", in.covectors, "Covector field JSON")->required()->check(CLI::ExistingFile);
    rem->add_option("--k", kValue, "Chord-arc constant (default: exhaustive k_hat)");
    rem->add_option("--max-listed", maxListed, "Violations listed in the report")->default_val(20);
    rem->callback([&] {
        run = [&] {
            SetHandle set;
            FieldHandle f;
            CovectorHandle a;
            in.load(set, &f, &a);
            ReportHandle report;
            check(qcalc_remainder_check(set.get(), f.get(), a.get(), kValue, maxListed, g.csv.empty() ? 0 : 1,
                                        &g.tol, report.out()));
            return finish(g, report);
        };
    });

    // holder-fit
    auto* holder = app.add_subcommand("holder-fit", "Fit power laws to the remainder and differential moduli");
    holder->add_option("set", in.set, "Set JSON")->required()->check(CLI::ExistingFile);
    holder->add_option("f", in.field, "Scalar field JSON")->required()->check(CLI::ExistingFile);
    holder->add_option("A", in.covectors, "Covector field JSON")->required()->check(CLI::ExistingFile);
    holder->add_option("--k", kValue, "Chord-arc constant (default: exhaustive k_hat)");
    holder->callback([&] {
        run = [&] {
            SetHandle set;
            FieldHandle f;
            CovectorHandle a;
            in.load(set, &f, &a);
            ReportHandle report;
            check(qcalc_holder_fit(set.get(), f.get(), a.get(), kValue, report.out()));
            return finish(g, report);
        };
    });

    // whitney
    auto* whitney = app.add_subcommand("whitney", "Whitney C1 test over dyadic distance scales");
    std::size_t buckets = 0;
    std::optional<double> slack;
    whitney->add_option("set", in.set, "Set JSON")->required()->check(CLI::ExistingFile);
    whitney->add_option("f", in.field, "Scalar field JSON")->required()->check(CLI::ExistingFile);
    whitney->add_option("A", in.covectors, "Covector field JSON")->required()->check(CLI::ExistingFile);
    whitney->add_option("--buckets", buckets, "Keep this many smallest scales (0 = all)");
    whitney->add_option("--slack", slack, "Decay constant; same as --tol decay=S");
    whitney->callback([&] {
        run = [&] {
            SetHandle set;
            FieldHandle f;
            CovectorHandle a;
            in.load(set, &f, &a);
            if (slack) {
                check(qcalc_tolerances_set(&g.tol, "decay", *slack));
            }
            ReportHandle report;
            check(qcalc_whitney(set.get(), f.get(), a.get(), buckets, &g.tol, report.out()));
            return finish(g, report);
        };
    });

    // flatness
    auto* flat = app.add_subcommand("flatness", "Local flatness and the determined subspace at a vertex");
    std::size_t index = 0;
    double flatRadius = 0.0;
    flat->add_option("set", in.set, "Set JSON")->required()->check(CLI::ExistingFile);
    flat->add_option("--index", index, "Center vertex")->required();
    flat->add_option("--radius", flatRadius, "Ball radius")->required();
    flat->add_option("--field", in.field, "Scalar field JSON for the differential")->check(CLI::ExistingFile);
    flat->callback([&] {
        run = [&] {
            SetHandle set;
            FieldHandle f;
            in.load(set, &f, nullptr);
            ReportHandle report;
            check(qcalc_flatness(set.get(), f ? f.get() : nullptr, index, flatRadius, &g.tol, report.out()));
            return finish(g, report);
        };
    });

    // clifford
    auto* clifford = app.add_subcommand("clifford", "Clifford-linear maps")->require_subcommand(1);
    std::string columnsPath;
    std::string side = "either";
    std::size_t cliffDim = 0;
    auto* ccheck = clifford->add_subcommand("check", "Test a linear map for left/right monogenicity");
    ccheck->add_option("columns", columnsPath, "Column list JSON")->required()->check(CLI::ExistingFile);
    ccheck->add_option("--side", side, "left, right or either")
        ->check(CLI::IsMember({"left", "right", "either"}))
        ->default_val("either");
    ccheck->callback([&] {
        run = [&] {
            const std::string text = readText(columnsPath);
            ReportHandle report;
            checkFile(qcalc_clifford_check(text.c_str(), parseSide(side), &g.tol, report.out()), columnsPath);
            return finish(g, report);
        };
    });
    auto* ccomplete = clifford->add_subcommand("complete", "Complete the last column of a monogenic map");
    ccomplete->add_option("--partial", columnsPath, "Columns c_1..c_{n-1}")->required()->check(CLI::ExistingFile);
    ccomplete->add_option("--dim", cliffDim, "Dimension n");
    ccomplete->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}))->default_val("left");
    ccomplete->callback([&] {
        run = [&] {
            const std::string text = readText(columnsPath);
            ReportHandle report;
            checkFile(qcalc_clifford_complete(text.c_str(), cliffDim, parseSide(side), &g.tol, report.out()),
                      columnsPath);
            return finish(g, report);
        };
    });
    auto* cdim = clifford->add_subcommand("dimension", "Dimension of the monogenic linear maps by rank");
    cdim->add_option("--dim", cliffDim, "Dimension n (2..6)")->required();
    cdim->callback([&] {
        run = [&] {
            ReportHandle report;
            check(qcalc_clifford_dimension(cliffDim, nullptr, report.out()));
            return finish(g, report);
        };
    });

    // graph-derivative
    auto* gd = app.add_subcommand("graph-derivative", "Tangential derivative of a complex field on a graph");
    gd->add_option("set", in.set, "Set JSON")->required()->check(CLI::ExistingFile);
    gd->add_option("f", in.field, "Complex field JSON")->required()->check(CLI::ExistingFile);
    gd->add_option("A", in.covectors, "Complex covector field JSON")->required()->check(CLI::ExistingFile);
    gd->callback([&] {
        run = [&] {
            SetHandle set;
            FieldHandle f;
            CovectorHandle a;
            in.load(set, &f, &a);
            ReportHandle report;
            check(qcalc_graph_derivative(set.get(), f.get(), a.get(), &g.tol, report.out()));
            return finish(g, report);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        g.resolve();
        if (!run) {
            throw UsageError("no command given");
        }
        return run();
    } catch (const UsageError& e) {
        std::cerr << "qcalc: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "qcalc: " << e.what() << "\n";
        return kExitUsage;
    }
}
