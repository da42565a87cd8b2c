#include "speciso/report.hpp"

#include <cstdint>

#include "json.hpp"

#include "speciso/format.hpp"

namespace speciso::report {

std::string decimal(const mpz_class& value) {
    return value.get_str();
}

unsigned long bit_length(const mpz_class& value) {
    if (value == 0)
        return 0;
    return mpz_sizeinbase(value.get_mpz_t(), 2);
}

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

std::string graph_digest(const Graph& g) {
    return "fnv1a64:" + fnv1a64_hex(emit_graph6(g));
}

std::string signature_table_json(const SignatureTable& table) {
    nlohmann::ordered_json out;
    out["order"] = table.order();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < table.order(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const mpz_class& v : table.row(i))
            row.push_back(decimal(v));
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    return out.dump();
}

} // namespace speciso::report
