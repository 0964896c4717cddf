#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "laban/devices.hpp"
#include "laban/errors.hpp"
#include "laban/polyhedra.hpp"
#include "laban/scale.hpp"

namespace laban {

namespace detail {

struct Token {
    std::string text;
    int line;  // 1-based
    int col;   // 1-based
};

// Splits on whitespace; a token beginning with '#' comments out the rest of
// its line.
inline std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    int line = 1;
    int col = 1;
    std::string current;
    int start_line = 1;
    int start_col = 1;
    bool in_comment = false;
    auto flush = [&]() {
        if (!current.empty()) {
            if (current.front() == '#') {
                in_comment = true;
            } else {
                tokens.push_back({current, start_line, start_col});
            }
            current.clear();
        }
    };
    for (char c : text) {
        if (c == '\n') {
            flush();
            in_comment = false;
            ++line;
            col = 1;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
            ++col;
            continue;
        }
        if (!in_comment) {
            if (current.empty()) {
                start_line = line;
                start_col = col;
            }
            current.push_back(c);
        }
        ++col;
    }
    flush();
    return tokens;
}

// Resolves direction tokens into one single-solid sequence; `first_index` is
// the 1-based position of tokens[0] within the enclosing token list, so
// diagnostics count tokens the way the caller's input reads.
inline MovementSequence resolve_sequence(const std::vector<Token>& tokens, int first_index) {
    MovementSequence seq;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& tok = tokens[i];
        const int token_index = first_index + static_cast<int>(i);
        Direction dir;
        try {
            dir = vertex_for_direction(tok.text);
        } catch (const unknown_direction_error&) {
            throw parse_error(tok.line, tok.col,
                              "unknown direction token '" + tok.text + "'", token_index);
        }
        if (!seq.steps.empty() && dir.solid != seq.steps.front().solid) {
            throw mixed_solid_error(tok.line, tok.col,
                                    "direction '" + tok.text + "' belongs to the " +
                                        to_string(dir.solid) + " but the sequence began on the " +
                                        to_string(seq.steps.front().solid),
                                    token_index);
        }
        seq.steps.push_back(std::move(dir));
    }
    return seq;
}

inline bool valid_name(const std::string& name) {
    if (name.empty()) {
        return false;
    }
    if (!std::isalpha(static_cast<unsigned char>(name.front())) && name.front() != '_') {
        return false;
    }
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') {
            return false;
        }
    }
    return true;
}

}  // namespace detail

// Parses whitespace-separated direction tokens into a sequence. All tokens
// must come from one solid. Diagnostics carry 1-based line/column and the
// 1-based token index.
inline MovementSequence parse_sequence(const std::string& text) {
    return detail::resolve_sequence(detail::tokenize(text), 1);
}

inline std::string serialize_sequence(const MovementSequence& s) {
    std::string out;
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        if (i > 0) {
            out.push_back(' ');
        }
        out += s.steps[i].token;
    }
    return out;
}

// Parses `atom ("." atom)*` with atoms fb, lh, lr, octa, diam, T0..T11.
// Atoms apply left to right; the scale resolves transpositions to vertex
// permutations (their clock action is scale-independent).
inline Device parse_device_expr(const std::string& text, const Scale& scale = default_scale()) {
    if (text.empty()) {
        throw parse_error(1, 1, "empty device expression");
    }
    std::vector<std::pair<std::string, int>> atoms;  // text, 1-based col
    std::string current;
    int start = 1;
    int col = 1;
    for (char c : text) {
        if (c == '.') {
            atoms.push_back({current, start});
            current.clear();
            start = col + 1;
        } else {
            current.push_back(c);
        }
        ++col;
    }
    atoms.push_back({current, start});

    Device result;
    bool first = true;
    int atom_index = 0;
    for (const auto& [atom, atom_col] : atoms) {
        ++atom_index;
        Device d;
        if (atom.empty()) {
            throw parse_error(1, atom_col, "empty device atom", atom_index);
        } else if (atom == "fb") {
            d = front_back_inversion();
        } else if (atom == "lh") {
            d = low_high_inversion();
        } else if (atom == "lr") {
            d = left_right_inversion();
        } else if (atom == "octa") {
            d = octahedral_inversion();
        } else if (atom == "diam") {
            d = diametral_inversion();
        } else if (atom.front() == 'T' && atom.size() > 1 &&
                   std::all_of(atom.begin() + 1, atom.end(), [](char c) {
                       return std::isdigit(static_cast<unsigned char>(c));
                   })) {
            // Reject over-long digit runs before std::stoi can overflow.
            const int k = atom.size() <= 4 ? std::stoi(atom.substr(1)) : 12;
            if (k > 11) {
                throw parse_error(1, atom_col,
                                  "transposition index " + atom.substr(1) +
                                      " outside 0..11",
                                  atom_index);
            }
            d = transposition(k, scale);
        } else {
            throw parse_error(1, atom_col, "unknown device atom '" + atom + "'", atom_index);
        }
        result = first ? std::move(d) : compose_devices(result, d);
        first = false;
    }
    return result;
}

// One statement of the script language:
//   seq <name> = <direction tokens>
//   form <name> @ <scale> = <clock positions>
//   apply <device-expr> <name> -> <newname>
struct ScriptStatement {
    enum class Kind { sequence_decl, form_decl, apply_op };

    Kind kind;
    int line = 1;
    std::string name;  // declared name (seq/form) or target name (apply)
    // sequence_decl payload
    MovementSequence sequence;
    // form_decl payload
    std::string scale_name;
    std::vector<ClockPosition> path;
    // apply_op payload
    std::string device_expr;
    int device_col = 1;
    std::string source;
    int source_col = 1;
};

struct Script {
    std::vector<ScriptStatement> statements;
};

namespace detail {

inline void expect_name(const Token& tok) {
    if (!valid_name(tok.text)) {
        throw parse_error(tok.line, tok.col, "invalid name '" + tok.text + "'");
    }
}

inline void expect_literal(const std::vector<Token>& tokens, std::size_t index,
                           const std::string& literal, int line, int line_len) {
    if (index >= tokens.size()) {
        throw parse_error(line, line_len, "expected '" + literal + "'");
    }
    if (tokens[index].text != literal) {
        throw parse_error(tokens[index].line, tokens[index].col,
                          "expected '" + literal + "', got '" + tokens[index].text + "'");
    }
}

}  // namespace detail

// Parses the line-oriented script format. '#' starts a comment; blank lines
// are ignored. Diagnostics are "line:col: message".
inline Script parse_script(const std::string& text) {
    Script script;
    std::vector<std::string> lines;
    {
        std::string current;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(current);
                current.clear();
            } else {
                current.push_back(c);
            }
        }
        lines.push_back(current);
    }

    for (std::size_t line_no = 0; line_no < lines.size(); ++line_no) {
        const std::string& line = lines[line_no];
        const int lineno = static_cast<int>(line_no) + 1;
        const int line_len = static_cast<int>(line.size()) + 1;
        std::vector<detail::Token> tokens = detail::tokenize(line);
        for (auto& tok : tokens) {
            tok.line = lineno;
        }
        if (tokens.empty()) {
            continue;
        }
        const std::string& keyword = tokens[0].text;
        ScriptStatement stmt;
        stmt.line = lineno;

        if (keyword == "seq") {
            stmt.kind = ScriptStatement::Kind::sequence_decl;
            if (tokens.size() < 2) {
                throw parse_error(lineno, line_len, "expected a sequence name after 'seq'");
            }
            detail::expect_name(tokens[1]);
            stmt.name = tokens[1].text;
            detail::expect_literal(tokens, 2, "=", lineno, line_len);
            if (tokens.size() < 4) {
                throw parse_error(lineno, line_len, "sequence '" + stmt.name +
                                                        "' needs at least one direction");
            }
            std::vector<detail::Token> rest(tokens.begin() + 3, tokens.end());
            stmt.sequence = detail::resolve_sequence(rest, 4);
        } else if (keyword == "form") {
            stmt.kind = ScriptStatement::Kind::form_decl;
            if (tokens.size() < 2) {
                throw parse_error(lineno, line_len, "expected a form name after 'form'");
            }
            detail::expect_name(tokens[1]);
            stmt.name = tokens[1].text;
            detail::expect_literal(tokens, 2, "@", lineno, line_len);
            if (tokens.size() < 4) {
                throw parse_error(lineno, line_len, "expected a scale name after '@'");
            }
            detail::expect_name(tokens[3]);
            stmt.scale_name = tokens[3].text;
            detail::expect_literal(tokens, 4, "=", lineno, line_len);
            if (tokens.size() < 6) {
                throw parse_error(lineno, line_len,
                                  "form '" + stmt.name + "' needs at least one clock position");
            }
            for (std::size_t i = 5; i < tokens.size(); ++i) {
                const detail::Token& tok = tokens[i];
                bool numeric = !tok.text.empty() &&
                               std::all_of(tok.text.begin(), tok.text.end(), [](char c) {
                                   return std::isdigit(static_cast<unsigned char>(c));
                               });
                if (!numeric) {
                    throw parse_error(tok.line, tok.col,
                                      "expected a clock position 0..11, got '" + tok.text + "'");
                }
                // Over-long digit runs are out of range without parsing.
                const int p = tok.text.size() <= 3 ? std::stoi(tok.text) : 12;
                if (p > 11) {
                    throw parse_error(tok.line, tok.col,
                                      "clock position " + tok.text + " outside 0..11");
                }
                stmt.path.push_back(ClockPosition(p));
            }
        } else if (keyword == "apply") {
            stmt.kind = ScriptStatement::Kind::apply_op;
            if (tokens.size() != 5) {
                throw parse_error(lineno, tokens[0].col,
                                  "expected: apply <device-expr> <name> -> <newname>");
            }
            stmt.device_expr = tokens[1].text;
            stmt.device_col = tokens[1].col;
            detail::expect_name(tokens[2]);
            stmt.source = tokens[2].text;
            stmt.source_col = tokens[2].col;
            detail::expect_literal(tokens, 3, "->", lineno, line_len);
            detail::expect_name(tokens[4]);
            stmt.name = tokens[4].text;
            // Validate the device expression eagerly so the script is
            // rejected before execution; positions are shifted onto this
            // line. The scale only affects vertex tables, not validity.
            try {
                (void)parse_device_expr(stmt.device_expr);
            } catch (const parse_error& e) {
                throw parse_error(lineno, stmt.device_col + e.col - 1, "in device expression: " +
                                                                           std::string(e.what()));
            }
        } else {
            throw parse_error(lineno, tokens[0].col,
                              "unknown statement '" + keyword +
                                  "' (expected seq, form, or apply)");
        }
        script.statements.push_back(std::move(stmt));
    }
    return script;
}

// Bindings produced by running a script, in creation order.
struct ScriptResult {
    std::vector<std::pair<std::string, MovementSequence>> sequences;
    std::vector<std::pair<std::string, ConfigTraceForm>> forms;
};

namespace detail {

inline const Scale& config_default_scale(const Config& config) {
    if (config.has_scale("primary")) {
        return config.scale("primary");
    }
    if (!config.scales.empty()) {
        return config.scales.front();
    }
    return default_scale();
}

}  // namespace detail

// Executes a script against a configuration. Config trace forms are visible
// as apply sources; everything a script declares or produces is returned.
// All execution errors are positioned script diagnostics.
inline ScriptResult run_script(const Script& script, const Config& config) {
    ScriptResult result;
    std::vector<std::pair<std::string, ConfigTraceForm>> form_env;
    for (const ConfigTraceForm& f : config.trace_forms) {
        form_env.push_back({f.form.name, f});
    }

    auto find_seq = [&](const std::string& name) -> const MovementSequence* {
        for (const auto& [n, s] : result.sequences) {
            if (n == name) {
                return &s;
            }
        }
        return nullptr;
    };
    auto find_form = [&](const std::string& name) -> const ConfigTraceForm* {
        for (const auto& [n, f] : form_env) {
            if (n == name) {
                return &f;
            }
        }
        return nullptr;
    };
    auto name_taken = [&](const std::string& name) {
        return find_seq(name) != nullptr || find_form(name) != nullptr;
    };

    for (const ScriptStatement& stmt : script.statements) {
        switch (stmt.kind) {
            case ScriptStatement::Kind::sequence_decl: {
                if (name_taken(stmt.name)) {
                    throw parse_error(stmt.line, 1,
                                      "name '" + stmt.name + "' is already bound");
                }
                result.sequences.push_back({stmt.name, stmt.sequence});
                break;
            }
            case ScriptStatement::Kind::form_decl: {
                if (name_taken(stmt.name)) {
                    throw parse_error(stmt.line, 1,
                                      "name '" + stmt.name + "' is already bound");
                }
                if (!config.has_scale(stmt.scale_name)) {
                    throw parse_error(stmt.line, 1,
                                      "unknown scale '" + stmt.scale_name + "'");
                }
                ConfigTraceForm form;
                form.form.name = stmt.name;
                form.form.path = stmt.path;
                form.scale_name = stmt.scale_name;
                form_env.push_back({stmt.name, form});
                result.forms.push_back({stmt.name, std::move(form)});
                break;
            }
            case ScriptStatement::Kind::apply_op: {
                if (name_taken(stmt.name)) {
                    throw parse_error(stmt.line, 1,
                                      "name '" + stmt.name + "' is already bound");
                }
                try {
                    if (const MovementSequence* seq = find_seq(stmt.source)) {
                        const Device device = parse_device_expr(
                            stmt.device_expr, detail::config_default_scale(config));
                        result.sequences.push_back(
                            {stmt.name, apply_sequence(device, *seq)});
                    } else if (const ConfigTraceForm* form = find_form(stmt.source)) {
                        const Scale& scale = config.scale(form->scale_name);
                        const Device device = parse_device_expr(stmt.device_expr, scale);
                        ConfigTraceForm out;
                        out.form = apply_device_on_clock(scale, device, form->form);
                        out.form.name = stmt.name;
                        out.scale_name = form->scale_name;
                        form_env.push_back({stmt.name, out});
                        result.forms.push_back({stmt.name, std::move(out)});
                    } else {
                        throw parse_error(stmt.line, stmt.source_col,
                                          "unknown name '" + stmt.source + "'");
                    }
                } catch (const parse_error&) {
                    throw;
                } catch (const laban::error& e) {
                    throw parse_error(stmt.line, stmt.device_col, e.what());
                }
                break;
            }
        }
    }
    return result;
}

}  // namespace laban
