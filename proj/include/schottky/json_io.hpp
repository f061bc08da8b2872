#pragma once

// JSON schemas for signatures and assemblies.
//
// Signature:
//   {"n": 2,
//    "counts": {"t0": 0, "t1": 1, "t6": 0, "t7": 0},
//    "orders": {"t2": [2], "t3": [4], "t4": [], "t5": []},
//    "t8": [{"orders": [3], "lox": 1, "has_glide": true}]}
// Counts for listed kinds are implied by the lists and may be omitted;
// when given they must agree. "lox" defaults to 0 and "has_glide" to the
// value implied by the structure of F.
//
// Assembly:
//   {"n": 2,
//    "factors": [{"kind": "T5", "lambda": 9.0, "order": 4,
//                 "host": {"center": [0, 0], "radius": 3.0}},
//                {"kind": "T2", "order": 2, "placement": "standard"},
//                {"kind": "T8", "f": {"orders": [3], "lox": 1}}],
//    "hnn": [{"circle1": {"center": [40, 0], "radius": 1.0},
//             "circle2": {"center": [46, 0], "radius": 1.0},
//             "transform": {"matrix": [[re,im],...x4], "reversing": false}}]}
// Factors without "host"/"placement" go to the default anchor layout.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "schottky/assembly.hpp"
#include "schottky/realize.hpp"
#include "schottky/signatures.hpp"

namespace schottky {

using Json = nlohmann::json;

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw IoError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

// ---- signatures ----

inline Signature signature_from_json(const Json& j) {
    try {
        Signature s;
        s.n = j.at("n").get<int>();
        auto counts = j.value("counts", Json::object());
        s.a0 = counts.value("t0", 0);
        s.a1 = counts.value("t1", 0);
        s.a6 = counts.value("t6", 0);
        s.a7 = counts.value("t7", 0);
        auto orders = j.value("orders", Json::object());
        s.t2_orders = orders.value("t2", std::vector<int>{});
        s.t3_orders = orders.value("t3", std::vector<int>{});
        s.t4_orders = orders.value("t4", std::vector<int>{});
        s.t5_orders = orders.value("t5", std::vector<int>{});
        for (const Json& sub : j.value("t8", Json::array())) {
            T8Sub f;
            f.elliptic_orders = sub.value("orders", std::vector<int>{});
            f.lox_count = sub.value("lox", 0);
            f.has_glide = sub.value("has_glide", f.glide_implied());
            s.t8.push_back(std::move(f));
        }
        auto check_count = [&](const char* key, int actual) {
            if (counts.contains(key) && counts.at(key).get<int>() != actual)
                throw IoError(std::string("count ") + key + " disagrees with its order list");
        };
        check_count("t2", s.a2());
        check_count("t3", s.a3());
        check_count("t4", s.a4());
        check_count("t5", s.a5());
        check_count("t8", s.a8());
        return canonical(s);
    } catch (const Json::exception& e) {
        throw IoError(std::string("bad signature JSON: ") + e.what());
    }
}

inline Json signature_to_json(const Signature& s) {
    Json j;
    j["n"] = s.n;
    j["counts"] = {{"t0", s.a0}, {"t1", s.a1}, {"t2", s.a2()}, {"t3", s.a3()},
                   {"t4", s.a4()}, {"t5", s.a5()}, {"t6", s.a6}, {"t7", s.a7},
                   {"t8", s.a8()}};
    j["orders"] = {{"t2", s.t2_orders}, {"t3", s.t3_orders}, {"t4", s.t4_orders},
                   {"t5", s.t5_orders}};
    j["t8"] = Json::array();
    for (const T8Sub& f : s.t8)
        j["t8"].push_back({{"orders", f.elliptic_orders}, {"lox", f.lox_count},
                           {"has_glide", f.has_glide}});
    return j;
}

// ---- assemblies ----

namespace detail {

inline Disc disc_from_json(const Json& j) {
    auto c = j.at("center");
    return disc_from_center_radius(Complex(c.at(0).get<double>(), c.at(1).get<double>()),
                                   j.at("radius").get<double>(), j.value("inside", true));
}

inline Json disc_to_json(const Disc& d) {
    EuclideanCircle e = to_euclidean(d);
    Json j;
    if (e.is_line) {
        j["line_point"] = {e.line_point.real(), e.line_point.imag()};
        j["line_dir"] = {e.line_dir.real(), e.line_dir.imag()};
    } else {
        j["center"] = {e.center.real(), e.center.imag()};
        j["radius"] = e.radius;
        j["inside"] = !contains(d, SpherePoint::infinity(), 0.0);
    }
    return j;
}

inline ExtendedMoebius transform_from_json(const Json& j) {
    auto m = j.at("matrix");
    auto entry = [&](int k) { return Complex(m.at(k).at(0).get<double>(),
                                             m.at(k).at(1).get<double>()); };
    return make_map(entry(0), entry(1), entry(2), entry(3), j.value("reversing", false));
}

inline Json transform_to_json(const ExtendedMoebius& t) {
    Json j;
    j["matrix"] = {{t.m.a.real(), t.m.a.imag()},
                   {t.m.b.real(), t.m.b.imag()},
                   {t.m.c.real(), t.m.c.imag()},
                   {t.m.d.real(), t.m.d.imag()}};
    j["reversing"] = t.reversing;
    return j;
}

inline BasicKind kind_from_string(const std::string& s) {
    for (int k = 0; k <= 8; ++k)
        if (s == to_string(static_cast<BasicKind>(k))) return static_cast<BasicKind>(k);
    throw IoError("unknown factor kind " + s);
}

} // namespace detail

inline GroupAssembly assembly_from_json(const Json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<BasicGroup> factors;
        int idx = 0;
        for (const Json& fj : j.at("factors")) {
            BasicParams p;
            p.kind = detail::kind_from_string(fj.at("kind").get<std::string>());
            p.lambda = fj.value("lambda", 0.0);
            p.order = fj.value("order", 0);
            if (fj.contains("f")) {
                p.f.elliptic_orders = fj.at("f").value("orders", std::vector<int>{});
                p.f.lox_count = fj.at("f").value("lox", 0);
            }
            std::optional<Disc> placement;
            if (fj.contains("host")) placement = detail::disc_from_json(fj.at("host"));
            else if (fj.value("placement", "") != "standard") placement = default_anchor(idx);
            factors.push_back(make_basic(p, n, placement));
            ++idx;
        }
        GroupAssembly a = free_product(std::move(factors));
        for (const Json& hj : j.value("hnn", Json::array()))
            a = hnn_extend(a, detail::disc_from_json(hj.at("circle1")),
                           detail::disc_from_json(hj.at("circle2")),
                           detail::transform_from_json(hj.at("transform")));
        return a;
    } catch (const Json::exception& e) {
        throw IoError(std::string("bad assembly JSON: ") + e.what());
    }
}

inline Json assembly_to_json(const GroupAssembly& a) {
    Json j;
    j["n"] = a.n;
    j["factors"] = Json::array();
    std::function<Json(const BasicGroup&)> factor_json = [&](const BasicGroup& f) {
        Json fj;
        fj["kind"] = to_string(f.kind);
        if (f.lambda != 0) fj["lambda"] = f.lambda;
        if (f.order != 0) fj["order"] = f.order;
        fj["host"] = detail::disc_to_json(f.host);
        if (f.inf_gen) fj["generator"] = detail::transform_to_json(*f.inf_gen);
        if (f.tors_gen) fj["torsion_generator"] = detail::transform_to_json(*f.tors_gen);
        if (f.pairing) {
            fj["circle1"] = detail::disc_to_json(f.pairing->d1);
            fj["circle2"] = detail::disc_to_json(f.pairing->d2);
        }
        if (f.sub) {
            fj["f"] = Json::array();
            for (const BasicGroup& sub : *f.sub) fj["f"].push_back(factor_json(sub));
        }
        return fj;
    };
    for (const BasicGroup& f : a.factors) j["factors"].push_back(factor_json(f));
    j["hnn"] = Json::array();
    for (const GroupAssembly::HnnPairing& h : a.hnn)
        j["hnn"].push_back({{"circle1", detail::disc_to_json(h.d1)},
                            {"circle2", detail::disc_to_json(h.d2)},
                            {"transform", detail::transform_to_json(h.t)}});
    return j;
}

} // namespace schottky
