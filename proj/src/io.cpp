#include "braid/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace braid {

using nlohmann::json;

namespace {

json complex_to_json(const cplx& v) { return json::array({v.real(), v.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw Error("expected a [re,im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

} // namespace

json matrix_to_json(const ComplexMatrix& m) {
    json entries = json::array();
    for (const cplx& v : m.entries()) entries.push_back(complex_to_json(v));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    std::vector<cplx> entries;
    entries.reserve(j.at("entries").size());
    for (const json& e : j.at("entries")) entries.push_back(complex_from_json(e));
    return ComplexMatrix::from_entries(rows, cols, std::move(entries));
}

json state_to_json(const QuditRegisterState& s) {
    json amps = json::array();
    for (const cplx& v : s.amplitudes) amps.push_back(complex_to_json(v));
    return json{{"D", s.D}, {"n", s.n}, {"amplitudes", std::move(amps)}};
}

QuditRegisterState state_from_json(const json& j) {
    QuditRegisterState s;
    s.D = j.at("D").get<std::size_t>();
    s.n = j.at("n").get<std::size_t>();
    if (s.D < 2 || s.n < 1) throw LevelError("state: invalid D or n");
    const json& amps = j.at("amplitudes");
    if (amps.size() != power_dim(s.D, s.n))
        throw ShapeError("state: amplitude count does not equal D^n");
    s.amplitudes.reserve(amps.size());
    for (const json& e : amps) s.amplitudes.push_back(complex_from_json(e));
    for (const cplx& v : s.amplitudes)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw Error("state: non-finite amplitude");
    return s;
}

std::string state_to_csv(const QuditRegisterState& s) {
    std::ostringstream out;
    out << "index,digits,re,im,prob\n";
    char buf[96];
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::string digits;
        for (int d : s.digits_of(i)) {
            if (!digits.empty() && s.D > 10) digits += ' ';
            digits += std::to_string(d);
        }
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g", s.amplitudes[i].real(),
                      s.amplitudes[i].imag(), std::norm(s.amplitudes[i]));
        out << i << ',' << digits << ',' << buf << '\n';
    }
    return out.str();
}

json gate_to_json(const GateParams& params, const std::vector<Involution>& lambdas) {
    json lams = json::array();
    for (const Involution& inv : lambdas) {
        switch (inv.kind) {
            case Involution::Kind::identity:
                lams.push_back(json{{"kind", "identity"}});
                break;
            case Involution::Kind::transposition:
                lams.push_back(json{{"kind", "transposition"}, {"s", inv.s}, {"t", inv.t}});
                break;
            case Involution::Kind::custom:
                lams.push_back(json{{"kind", "custom"}, {"matrix", matrix_to_json(inv.matrix)}});
                break;
        }
    }
    return json{{"D", params.D},         {"n", params.n},
                {"k", params.k},         {"q", params.q},
                {"l", params.l},         {"a2", params.a_squared()},
                {"b_sign", params.b_sign}, {"phi", params.phi},
                {"lambdas", std::move(lams)}};
}

std::pair<GateParams, std::vector<Involution>> gate_from_json(const json& j) {
    const GateParams params = GateParams::make(
        j.at("D").get<std::size_t>(), j.at("n").get<std::size_t>(), j.at("k").get<std::size_t>(),
        j.at("q").get<int>(), j.at("l").get<int>(), j.at("a2").get<double>(),
        j.value("b_sign", 1), j.value("phi", 0.0));
    std::vector<Involution> lambdas;
    for (const json& e : j.at("lambdas")) {
        const std::string kind = e.at("kind").get<std::string>();
        if (kind == "identity")
            lambdas.push_back(Involution::make_identity());
        else if (kind == "transposition")
            lambdas.push_back(
                Involution::make_transposition(e.at("s").get<int>(), e.at("t").get<int>()));
        else if (kind == "custom")
            lambdas.push_back(Involution::make_custom(matrix_from_json(e.at("matrix"))));
        else
            throw InvalidInvolution("unknown involution kind: " + kind);
    }
    return {params, std::move(lambdas)};
}

QuditRegisterState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open state file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("invalid state JSON in " + path + ": " + e.what());
    }
    try {
        return state_from_json(j);
    } catch (const json::exception& e) {
        throw Error("invalid state JSON in " + path + ": " + e.what());
    }
}

void save_state_file(const QuditRegisterState& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    out << state_to_json(s).dump(2) << '\n';
}

} // namespace braid
