#include <json.hpp>

#include "sldic/analysis.hpp"
#include "sldic/errors.hpp"
#include "sldic/scheme.hpp"

namespace sldic {

namespace {

using nlohmann::json;

json matrix_to_json(const BitMatrix& m) {
    // Row-wise bit strings, top level first; column order is [W1|W2|D|E].
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_string(r));
    return rows;
}

BitMatrix matrix_from_json(const json& rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string& line = rows[r].get_ref<const std::string&>();
        if (line.size() != cols) throw MalformedSchemeError("matrix row width mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            if (line[c] == '1')
                m.set(r, c, true);
            else if (line[c] != '0')
                throw MalformedSchemeError("matrix rows must be 0/1 strings");
        }
    }
    return m;
}

Regime regime_from_string(const std::string& s) {
    for (Regime r : {Regime::weak, Regime::moderate, Regime::unity, Regime::high,
                     Regime::very_high})
        if (to_string(r) == s) return r;
    throw MalformedSchemeError("unknown regime tag: " + s);
}

RateResult rate_from_string(const std::string& s) {
    const auto slash = s.find('/');
    RateResult r;
    r.numerator = std::stoll(s.substr(0, slash));
    r.denominator = slash == std::string::npos ? 1 : std::stoll(s.substr(slash + 1));
    return r;
}

}  // namespace

std::string to_json_string(const SchemeDescription& s, int indent) {
    json j;
    j["params"] = {{"m", s.params.m}, {"n", s.params.n}, {"C", s.params.C}, {"q", s.params.q()}};
    j["regime"] = to_string(s.regime);
    j["layout"] = {{"w1_len", s.layout.w1_len},
                   {"w2_len", s.layout.w2_len},
                   {"d_len", s.layout.d_len},
                   {"e_len", s.layout.e_len},
                   {"total", s.layout.total()}};
    j["rate"] = std::to_string(s.rate.numerator) + "/" + std::to_string(s.rate.denominator);
    json slots = json::array();
    for (std::size_t k = 0; k < s.slots.size(); ++k) {
        json slot;
        slot["G1"] = matrix_to_json(s.slots[k].g1);
        slot["G2"] = matrix_to_json(s.slots[k].g2);
        const CoopUsage& u = s.coop_ledger[k];
        slot["coop"] = {{"w2_to_tx1", u.w2_to_tx1},
                        {"e_to_tx1", u.e_to_tx1},
                        {"w1_to_tx2", u.w1_to_tx2},
                        {"d_to_tx2", u.d_to_tx2}};
        slots.push_back(std::move(slot));
    }
    j["slots"] = std::move(slots);
    return j.dump(indent);
}

SchemeDescription scheme_from_json_string(const std::string& text) {
    const json j = json::parse(text);
    SchemeDescription s;
    s.params.m = j.at("params").at("m").get<int>();
    s.params.n = j.at("params").at("n").get<int>();
    s.params.C = j.at("params").at("C").get<int>();
    s.regime = regime_from_string(j.at("regime").get<std::string>());
    s.layout.w1_len = j.at("layout").at("w1_len").get<std::size_t>();
    s.layout.w2_len = j.at("layout").at("w2_len").get<std::size_t>();
    s.layout.d_len = j.at("layout").at("d_len").get<std::size_t>();
    s.layout.e_len = j.at("layout").at("e_len").get<std::size_t>();
    s.rate = rate_from_string(j.at("rate").get<std::string>());
    for (const json& slot : j.at("slots")) {
        TimeSlot ts{matrix_from_json(slot.at("G1"), s.layout.total()),
                    matrix_from_json(slot.at("G2"), s.layout.total())};
        s.slots.push_back(std::move(ts));
        CoopUsage u;
        u.w2_to_tx1 = slot.at("coop").at("w2_to_tx1").get<std::vector<std::size_t>>();
        u.e_to_tx1 = slot.at("coop").at("e_to_tx1").get<std::vector<std::size_t>>();
        u.w1_to_tx2 = slot.at("coop").at("w1_to_tx2").get<std::vector<std::size_t>>();
        u.d_to_tx2 = slot.at("coop").at("d_to_tx2").get<std::vector<std::size_t>>();
        s.coop_ledger.push_back(std::move(u));
    }
    return s;
}

std::string to_json_string(const VerificationReport& r, int indent) {
    const auto frac_bits = [](const Rational& v) {
        return std::to_string(v.num()) + "/" + std::to_string(v.den()) + " bits";
    };
    json j;
    j["decodable"] = {r.decodable_1, r.decodable_2};
    j["secret"] = {r.secret_1, r.secret_2};
    j["mi_bits"] = {frac_bits(r.mi_bits_1), frac_bits(r.mi_bits_2)};
    j["cond_h_bits"] = {frac_bits(r.cond_h_1), frac_bits(r.cond_h_2)};
    j["method"] = to_string(r.method);
    j["state_count"] = r.state_count;
    return j.dump(indent);
}

std::string to_json_string(const SchemeDescription& s, const VerificationReport& r, int indent) {
    json j;
    j["scheme"] = json::parse(to_json_string(s, 0));
    j["report"] = json::parse(to_json_string(r, 0));
    return j.dump(indent);
}

}  // namespace sldic
