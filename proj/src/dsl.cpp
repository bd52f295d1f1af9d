#include "braid/dsl.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>

#include "braid/connector.hpp"
#include "braid/io.hpp"

namespace braid::dsl {

namespace {

struct Token {
    std::string text;
    SourcePos pos;
};

bool is_special(char c) {
    return c == '|' || c == '>' || c == '[' || c == ']' || c == '(' || c == ')' || c == ',' ||
           c == '=';
}

// One statement per line; '#' starts a comment; blank lines are skipped.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    int line_no = 1;
    std::size_t i = 0;
    std::vector<Token> current;
    auto flush = [&] {
        if (!current.empty()) lines.push_back(std::move(current));
        current.clear();
    };
    int col = 1;
    bool in_comment = false;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            flush();
            ++line_no;
            col = 1;
            in_comment = false;
            ++i;
            continue;
        }
        if (in_comment || c == '#') {
            in_comment = true;
            ++i;
            ++col;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            ++col;
            continue;
        }
        const SourcePos pos{line_no, col};
        if (is_special(c)) {
            current.push_back({std::string(1, c), pos});
            ++i;
            ++col;
            continue;
        }
        std::string word;
        while (i < text.size()) {
            const char w = text[i];
            if (w == '\n' || w == '#' || is_special(w) ||
                std::isspace(static_cast<unsigned char>(w)))
                break;
            word += w;
            ++i;
            ++col;
        }
        current.push_back({std::move(word), pos});
    }
    flush();
    return lines;
}

class LineParser {
  public:
    explicit LineParser(const std::vector<Token>& tokens) : tokens_(tokens) {}

    bool done() const { return idx_ >= tokens_.size(); }

    SourcePos pos() const {
        if (idx_ < tokens_.size()) return tokens_[idx_].pos;
        if (!tokens_.empty()) {
            SourcePos p = tokens_.back().pos;
            p.col += static_cast<int>(tokens_.back().text.size());
            return p;
        }
        return {};
    }

    const Token& peek() const {
        if (done()) throw SyntaxError(pos(), "more input");
        return tokens_[idx_];
    }

    Token take() {
        if (done()) throw SyntaxError(pos(), "more input");
        return tokens_[idx_++];
    }

    bool accept(std::string_view text) {
        if (!done() && tokens_[idx_].text == text) {
            ++idx_;
            return true;
        }
        return false;
    }

    void expect(std::string_view text) {
        if (!accept(text)) throw SyntaxError(pos(), "'" + std::string(text) + "'");
    }

    long expect_int() {
        const Token t = take();
        long value = 0;
        const auto [ptr, ec] =
            std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
            throw SyntaxError(t.pos, "an integer");
        return value;
    }

    double expect_float() {
        const Token t = take();
        try {
            std::size_t consumed = 0;
            const double value = std::stod(t.text, &consumed);
            if (consumed != t.text.size() || !std::isfinite(value))
                throw SyntaxError(t.pos, "a number");
            return value;
        } catch (const SyntaxError&) {
            throw;
        } catch (...) {
            throw SyntaxError(t.pos, "a number");
        }
    }

    void expect_end() {
        if (!done()) throw SyntaxError(pos(), "end of statement");
    }

  private:
    const std::vector<Token>& tokens_;
    std::size_t idx_ = 0;
};

// |digits>: single characters for D ≤ 10, comma-separated numbers otherwise.
std::vector<int> parse_ket(LineParser& p) {
    p.expect("|");
    std::vector<Token> content;
    bool comma_form = false;
    while (!p.done() && p.peek().text != ">") {
        Token t = p.take();
        if (t.text == ",")
            comma_form = true;
        else
            content.push_back(std::move(t));
    }
    p.expect(">");
    if (content.empty()) throw SyntaxError(p.pos(), "ket digits");
    std::vector<int> digits;
    if (comma_form) {
        for (const Token& t : content) {
            int value = 0;
            const auto [ptr, ec] =
                std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
            if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
                throw SyntaxError(t.pos, "a level number");
            digits.push_back(value);
        }
    } else {
        for (const Token& t : content)
            for (char c : t.text) {
                if (c < '0' || c > '9') throw SyntaxError(t.pos, "a digit 0-9");
                digits.push_back(c - '0');
            }
    }
    return digits;
}

void check_digits(const std::vector<int>& digits, std::size_t D, std::size_t n, SourcePos pos) {
    if (digits.size() != n)
        throw SemanticError(pos, "ket has " + std::to_string(digits.size()) +
                                     " digits, register has n=" + std::to_string(n));
    for (int d : digits)
        if (d < 0 || static_cast<std::size_t>(d) >= D)
            throw SemanticError(pos, "level " + std::to_string(d) +
                                         " out of range for D=" + std::to_string(D));
}

std::vector<Involution> parse_lambda_list(LineParser& p, std::size_t D, std::size_t n,
                                          SourcePos pos) {
    p.expect("[");
    std::vector<Involution> lambdas;
    while (true) {
        const Token t = p.take();
        if (t.text == "I") {
            lambdas.push_back(Involution::make_identity());
        } else if (t.text == "X") {
            p.expect("(");
            const long s = p.expect_int();
            p.expect(",");
            const long u = p.expect_int();
            p.expect(")");
            if (s < 0 || u < 0 || static_cast<std::size_t>(s) >= D ||
                static_cast<std::size_t>(u) >= D)
                throw SemanticError(t.pos, "transposition level out of range for D=" +
                                               std::to_string(D));
            lambdas.push_back(
                Involution::make_transposition(static_cast<int>(s), static_cast<int>(u)));
        } else {
            throw SyntaxError(t.pos, "'I' or 'X(s,t)'");
        }
        if (p.accept(",")) continue;
        p.expect("]");
        break;
    }
    if (lambdas.size() != n - 1)
        throw SemanticError(pos, "lambda list needs n-1 = " + std::to_string(n - 1) +
                                     " entries, got " + std::to_string(lambdas.size()));
    return lambdas;
}

std::vector<int> parse_signs(const Token& t) {
    std::vector<int> signs;
    for (char c : t.text) {
        if (c == '+')
            signs.push_back(+1);
        else if (c == '-')
            signs.push_back(-1);
        else
            throw SyntaxError(t.pos, "a string of '+'/'-'");
    }
    return signs;
}

} // namespace

CircuitProgram parse_program(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw SyntaxError({1, 1}, "'system D=<int> n=<int>' header");

    CircuitProgram prog;
    bool have_header = false;
    bool have_init = false;
    bool have_action = false; // gate/ghz/connect seen

    for (const auto& line : lines) {
        LineParser p(line);
        const Token head = p.take();
        if (!have_header) {
            if (head.text != "system")
                throw SyntaxError(head.pos, "'system D=<int> n=<int>' header");
            p.expect("D");
            p.expect("=");
            const long D = p.expect_int();
            p.expect("n");
            p.expect("=");
            const long n = p.expect_int();
            p.expect_end();
            if (D < 2) throw SemanticError(head.pos, "D must be at least 2");
            if (n < 1) throw SemanticError(head.pos, "n must be at least 1");
            prog.D = static_cast<std::size_t>(D);
            prog.n = static_cast<std::size_t>(n);
            have_header = true;
            continue;
        }

        if (head.text == "system") throw SemanticError(head.pos, "duplicate system header");

        Statement stmt;
        stmt.pos = head.pos;
        if (head.text == "init") {
            if (have_init) throw SemanticError(head.pos, "duplicate init statement");
            if (have_action) throw SemanticError(head.pos, "init must precede gate statements");
            InitStmt init;
            init.digits = parse_ket(p);
            p.expect_end();
            check_digits(init.digits, prog.D, prog.n, head.pos);
            have_init = true;
            stmt.node = std::move(init);
        } else if (head.text == "gate") {
            p.expect("B");
            GateStmt gate;
            bool saw_q = false, saw_l = false, saw_k = false, saw_a2 = false;
            bool saw_lambda = false;
            while (!p.done()) {
                const Token key = p.take();
                p.expect("=");
                if (key.text == "q") {
                    gate.q = static_cast<int>(p.expect_int());
                    saw_q = true;
                } else if (key.text == "l") {
                    gate.l = static_cast<int>(p.expect_int());
                    saw_l = true;
                } else if (key.text == "k") {
                    const long k = p.expect_int();
                    if (k < 1) throw SemanticError(key.pos, "k must be positive");
                    gate.k = static_cast<std::size_t>(k);
                    saw_k = true;
                } else if (key.text == "a2") {
                    gate.a2 = p.expect_float();
                    saw_a2 = true;
                } else if (key.text == "phi") {
                    gate.phi = p.expect_float();
                } else if (key.text == "bsign") {
                    const Token sign = p.take();
                    if (sign.text == "+")
                        gate.b_sign = +1;
                    else if (sign.text == "-")
                        gate.b_sign = -1;
                    else
                        throw SyntaxError(sign.pos, "'+' or '-'");
                } else if (key.text == "lambda") {
                    gate.lambdas = parse_lambda_list(p, prog.D, prog.n, key.pos);
                    saw_lambda = true;
                } else {
                    throw SyntaxError(key.pos, "one of q, l, k, a2, phi, bsign, lambda");
                }
            }
            if (!saw_q || !saw_l || !saw_a2)
                throw SyntaxError(head.pos, "gate parameters q, l and a2");
            if (!saw_k) gate.k = 1;
            if (!saw_lambda)
                gate.lambdas.assign(prog.n - 1, Involution::make_identity());

            if (gate.q < 0 || static_cast<std::size_t>(gate.q) >= prog.D)
                throw SemanticError(head.pos, "pivot level q out of range");
            if (gate.l < 0 || static_cast<std::size_t>(gate.l) >= prog.D)
                throw SemanticError(head.pos, "target level l out of range");
            if (gate.q == gate.l) throw SemanticError(head.pos, "pivot collision: q = l");
            if (gate.k > prog.n) throw SemanticError(head.pos, "k exceeds n");
            if (!(gate.a2 >= 0.25 && gate.a2 <= 1.0))
                throw SemanticError(head.pos, "a2 outside [0.25,1]");
            stmt.node = std::move(gate);
            have_action = true;
        } else if (head.text == "ghz") {
            GhzStmt ghz;
            bool saw_l = false;
            while (!p.done()) {
                const Token key = p.take();
                p.expect("=");
                if (key.text == "l") {
                    ghz.l = static_cast<int>(p.expect_int());
                    saw_l = true;
                } else if (key.text == "k") {
                    const long k = p.expect_int();
                    if (k < 1) throw SemanticError(key.pos, "k must be positive");
                    ghz.k = static_cast<std::size_t>(k);
                } else if (key.text == "bsigns") {
                    ghz.b_signs = parse_signs(p.take());
                } else {
                    throw SyntaxError(key.pos, "one of l, k, bsigns");
                }
            }
            if (!saw_l) throw SyntaxError(head.pos, "ghz parameter l");
            if (ghz.l < 1 || static_cast<std::size_t>(ghz.l) >= prog.D)
                throw SemanticError(head.pos, "ghz level l must lie in [1, D-1]");
            if (ghz.k > prog.n) throw SemanticError(head.pos, "k exceeds n");
            if (!ghz.b_signs.empty() && ghz.b_signs.size() != static_cast<std::size_t>(ghz.l))
                throw SemanticError(head.pos, "bsigns must have l entries");
            stmt.node = std::move(ghz);
            have_action = true;
        } else if (head.text == "connect") {
            ConnectStmt conn;
            conn.digits = parse_ket(p);
            p.expect("from");
            conn.path = p.take().text;
            p.expect_end();
            check_digits(conn.digits, prog.D, prog.n, head.pos);
            stmt.node = std::move(conn);
            have_action = true;
        } else if (head.text == "dump") {
            DumpStmt dump;
            const Token fmt = p.take();
            if (fmt.text == "json")
                dump.format = DumpStmt::Format::json;
            else if (fmt.text == "csv")
                dump.format = DumpStmt::Format::csv;
            else
                throw SyntaxError(fmt.pos, "'json' or 'csv'");
            if (!p.done()) dump.path = p.take().text;
            p.expect_end();
            stmt.node = std::move(dump);
        } else {
            throw SyntaxError(head.pos, "a statement (init, gate, ghz, connect, dump)");
        }
        prog.statements.push_back(std::move(stmt));
    }
    if (!have_header) throw SyntaxError({1, 1}, "'system' header");
    return prog;
}

namespace {

std::string ket_text(const std::vector<int>& digits, std::size_t D) {
    std::string out = "|";
    if (D <= 10) {
        for (int d : digits) out += static_cast<char>('0' + d);
    } else {
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(digits[i]);
        }
    }
    out += '>';
    return out;
}

std::string float_text(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string pretty_print(const CircuitProgram& prog) {
    std::ostringstream out;
    out << "system D=" << prog.D << " n=" << prog.n << '\n';
    for (const Statement& stmt : prog.statements) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, InitStmt>) {
                    out << "init " << ket_text(node.digits, prog.D) << '\n';
                } else if constexpr (std::is_same_v<T, GateStmt>) {
                    out << "gate B q=" << node.q << " l=" << node.l << " k=" << node.k
                        << " a2=" << float_text(node.a2);
                    if (node.phi != 0.0) out << " phi=" << float_text(node.phi);
                    if (node.b_sign < 0) out << " bsign=-";
                    out << " lambda=[";
                    for (std::size_t i = 0; i < node.lambdas.size(); ++i) {
                        if (i) out << ',';
                        const Involution& inv = node.lambdas[i];
                        if (inv.kind == Involution::Kind::transposition)
                            out << "X(" << inv.s << ',' << inv.t << ')';
                        else
                            out << 'I';
                    }
                    out << "]\n";
                } else if constexpr (std::is_same_v<T, GhzStmt>) {
                    out << "ghz l=" << node.l << " k=" << node.k;
                    if (!node.b_signs.empty()) {
                        out << " bsigns=";
                        for (int s : node.b_signs) out << (s < 0 ? '-' : '+');
                    }
                    out << '\n';
                } else if constexpr (std::is_same_v<T, ConnectStmt>) {
                    out << "connect " << ket_text(node.digits, prog.D) << " from " << node.path
                        << '\n';
                } else if constexpr (std::is_same_v<T, DumpStmt>) {
                    out << "dump "
                        << (node.format == DumpStmt::Format::json ? "json" : "csv");
                    if (!node.path.empty()) out << ' ' << node.path;
                    out << '\n';
                }
            },
            stmt.node);
    }
    return out.str();
}

RunResult execute_program(const CircuitProgram& prog, const std::string& base_dir) {
    RunResult result;
    result.final_state = basis_state(prog.D, prog.n, std::vector<int>(prog.n, 0));

    for (std::size_t si = 0; si < prog.statements.size(); ++si) {
        const Statement& stmt = prog.statements[si];
        try {
            std::visit(
                [&](const auto& node) {
                    using T = std::decay_t<decltype(node)>;
                    if constexpr (std::is_same_v<T, InitStmt>) {
                        result.final_state = basis_state(prog.D, prog.n, node.digits);
                    } else if constexpr (std::is_same_v<T, GateStmt>) {
                        const GateParams params = GateParams::make(
                            prog.D, prog.n, node.k, node.q, node.l, node.a2, node.b_sign,
                            node.phi);
                        const StructuredBraidGate gate = make_braid_gate(params, node.lambdas);
                        result.final_state = apply_gate(gate, result.final_state);
                    } else if constexpr (std::is_same_v<T, GhzStmt>) {
                        const GhzParamSet set = ghz_params(node.l, node.b_signs);
                        std::vector<ChainStep> steps;
                        for (int pstep = 1; pstep <= node.l; ++pstep) {
                            ChainStep step;
                            step.level = pstep;
                            step.a_squared = set.pairs[static_cast<std::size_t>(pstep - 1)].first;
                            step.b_sign = set.b_signs[static_cast<std::size_t>(pstep - 1)];
                            step.lambdas.assign(prog.n - 1,
                                                Involution::make_transposition(0, pstep));
                            steps.push_back(std::move(step));
                        }
                        result.final_state = run_superposition_chain(
                            prog.D, prog.n, node.k, 0, steps, result.final_state);
                    } else if constexpr (std::is_same_v<T, ConnectStmt>) {
                        std::filesystem::path path(node.path);
                        if (path.is_relative() && !base_dir.empty())
                            path = std::filesystem::path(base_dir) / path;
                        const QuditRegisterState psi = load_state_file(path.string());
                        if (psi.D != prog.D || psi.n != prog.n)
                            throw ShapeError("loaded state does not match system header");
                        const ConnectorGate gate = connect(psi, node.digits);
                        result.final_state = apply_connector(gate, result.final_state);
                    } else if constexpr (std::is_same_v<T, DumpStmt>) {
                        DumpArtifact artifact;
                        artifact.format = node.format;
                        artifact.path = node.path;
                        artifact.content = node.format == DumpStmt::Format::json
                                               ? state_to_json(result.final_state).dump(2) + "\n"
                                               : state_to_csv(result.final_state);
                        result.dumps.push_back(std::move(artifact));
                    }
                },
                stmt.node);
        } catch (const RuntimeStmtError&) {
            throw;
        } catch (const Error& e) {
            throw RuntimeStmtError(si, e.what());
        }
        result.step_norms.push_back(result.final_state.norm());
    }
    return result;
}

} // namespace braid::dsl
