/// @file golden_diff.cpp
/// @brief Structural JSON comparison with a numeric tolerance.
#include <cmath>
#include <fstream>
#include <iostream>

#include "json.hpp"

using json = nlohmann::json;

namespace {

bool same(const json& e, const json& a, const std::string& path, double tol) {
    if (e.is_number() && a.is_number()) {
        const double x = e.get<double>(), y = a.get<double>();
        if (std::fabs(x - y) <= tol * (1.0 + std::fabs(x))) return true;
        std::cerr << path << ": " << x << " != " << y << '\n';
        return false;
    }
    if (e.type() != a.type() || e.size() != a.size()) {
        std::cerr << path << ": " << e.dump() << " != " << a.dump() << '\n';
        return false;
    }
    if (e.is_object()) {
        bool ok = true;
        for (const auto& [k, v] : e.items()) {
            if (!a.contains(k)) {
                std::cerr << path << '/' << k << ": missing\n";
                return false;
            }
            ok = same(v, a.at(k), path + '/' + k, tol) && ok;
        }
        return ok;
    }
    if (e.is_array()) {
        bool ok = true;
        for (std::size_t i = 0; i < e.size(); ++i) ok = same(e[i], a[i], path + '/' + std::to_string(i), tol) && ok;
        return ok;
    }
    if (e != a) {
        std::cerr << path << ": " << e.dump() << " != " << a.dump() << '\n';
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: golden_diff expected.json actual.json [tol]\n";
        return 2;
    }
    const double tol = argc > 3 ? std::stod(argv[3]) : 1e-9;
    std::ifstream fe(argv[1]), fa(argv[2]);
    if (!fe || !fa) {
        std::cerr << "cannot open input\n";
        return 2;
    }
    try {
        return same(json::parse(fe), json::parse(fa), "", tol) ? 0 : 1;
    } catch (const json::parse_error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
}
