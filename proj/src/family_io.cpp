#include "sepdim/family_io.hpp"

#include <fstream>

#include "sepdim/errors.hpp"

#include <json.hpp>

namespace sepdim {

PermutationFamily read_family(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("family file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("permutations"))
        throw parse_error("family file: expected object with fields 'n' and 'permutations'");
    if (!j["n"].is_number_integer())
        throw parse_error("family file: 'n' must be an integer");
    PermutationFamily fam;
    fam.n = j["n"].get<int>();
    if (fam.n < 0) throw parse_error("family file: 'n' must be non-negative");
    if (!j["permutations"].is_array())
        throw parse_error("family file: 'permutations' must be a list");
    for (const auto& entry : j["permutations"]) {
        if (!entry.is_array())
            throw parse_error("family file: each permutation must be a list of vertex ids");
        std::vector<int> order;
        order.reserve(entry.size());
        for (const auto& x : entry) {
            if (!x.is_number_integer())
                throw parse_error("family file: permutation entries must be integers");
            order.push_back(x.get<int>());
        }
        if (static_cast<int>(order.size()) != fam.n)
            throw parse_error("family file: permutation length " +
                              std::to_string(order.size()) + " does not match n=" +
                              std::to_string(fam.n));
        try {
            fam.members.emplace_back(std::move(order));
        } catch (const domain_error& e) {
            throw parse_error(std::string("family file: ") + e.what());
        }
    }
    return fam;
}

PermutationFamily read_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return read_family(in);
}

void write_family(const PermutationFamily& fam, std::ostream& out) {
    nlohmann::json j;
    j["n"] = fam.n;
    j["permutations"] = nlohmann::json::array();
    for (const Permutation& p : fam.members) j["permutations"].push_back(p.order());
    out << j.dump(2) << '\n';
}

void write_family_file(const PermutationFamily& fam, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    write_family(fam, out);
    if (!out) throw parse_error("write failed for '" + path + "'");
}

}  // namespace sepdim
