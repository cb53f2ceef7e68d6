#include "logcave/textio.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "logcave/errors.hpp"

namespace logcave {

namespace {

std::string strip_spaces(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
        }
    }
    return out;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
}

// [+-] digits [ "/" digits ], already space-free.
Rat parse_rat_token(const std::string& token) {
    std::string body = token;
    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    const auto slash = body.find('/');
    std::string num = body.substr(0, slash);
    if (!all_digits(num)) {
        throw parse_error("malformed rational: \"" + token + "\"");
    }
    Int p(num, 10);
    Int q(1);
    if (slash != std::string::npos) {
        std::string den = body.substr(slash + 1);
        if (!all_digits(den)) {
            throw parse_error("malformed rational: \"" + token + "\"");
        }
        q = Int(den, 10);
        if (q == 0) {
            throw parse_error("zero denominator: \"" + token + "\"");
        }
    }
    if (negative) {
        p = -p;
    }
    return make_rat(p, q);
}

// Unsigned rational used as a radical coefficient.
Rat parse_coeff_token(const std::string& token) {
    if (token.empty() || token[0] == '+' || token[0] == '-') {
        throw parse_error("malformed radical coefficient: \"" + token + "\"");
    }
    return parse_rat_token(token);
}

std::string format_rat_abs(const Rat& v) {
    Rat a = abs(v);
    std::string out = a.get_num().get_str();
    if (a.get_den() != 1) {
        out += "/" + a.get_den().get_str();
    }
    return out;
}

}  // namespace

std::string format_rat(const Rat& v) {
    return (sgn(v) < 0 ? "-" : "") + format_rat_abs(v);
}

std::string format_qf(const QField& v) {
    if (v.is_rational()) {
        return format_rat(v.as_rat());
    }
    const Rat& b = v.rad_coeff();
    std::string radical;
    if (abs(b) != 1) {
        radical = format_rat_abs(b) + "*";
    }
    radical += "sqrt(" + v.radicand().get_str() + ")";
    const std::string rad_sign = sgn(b) < 0 ? "-" : "+";
    if (v.rat_part() == 0) {
        return (sgn(b) < 0 ? "-" : "") + radical;
    }
    return format_rat(v.rat_part()) + rad_sign + radical;
}

std::string format_seq(const Seq& s) {
    std::string out;
    for (long k = 0; k < s.size(); ++k) {
        if (k > 0) {
            out += ",";
        }
        out += format_qf(s.at(k));
    }
    return out;
}

Rat parse_rat(const std::string& text) {
    return parse_rat_token(strip_spaces(text));
}

QField parse_qf(const std::string& text) {
    const std::string t = strip_spaces(text);
    if (t.empty()) {
        throw parse_error("empty value");
    }
    if (t == "r0") {
        return r0();
    }
    if (t == "r1") {
        return r1();
    }
    if (t.rfind("phi(", 0) == 0) {
        if (t.back() != ')') {
            throw parse_error("malformed value: \"" + text + "\"");
        }
        return golden_ratio_of(parse_rat_token(t.substr(4, t.size() - 5)));
    }

    const auto p = t.find("sqrt(");
    if (p == std::string::npos) {
        return QField(parse_rat_token(t));
    }
    if (t.back() != ')' || t.find("sqrt(", p + 1) != std::string::npos) {
        throw parse_error("malformed value: \"" + text + "\"");
    }
    const std::string d_text = t.substr(p + 5, t.size() - p - 6);
    if (!all_digits(d_text)) {
        throw parse_error("malformed radicand: \"" + text + "\"");
    }
    Int d(d_text, 10);

    std::string head = t.substr(0, p);
    Rat coeff(1);
    if (!head.empty() && head.back() == '*') {
        head.pop_back();
        // The coefficient is the maximal unsigned-rational suffix of head.
        auto start = head.size();
        while (start > 0) {
            const char c = head[start - 1];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '/') {
                --start;
            } else {
                break;
            }
        }
        coeff = parse_coeff_token(head.substr(start));
        head.erase(start);
    }

    Rat rat_part(0);
    int rad_sign = 1;
    if (!head.empty()) {
        const char connector = head.back();
        if (connector != '+' && connector != '-') {
            throw parse_error("malformed value: \"" + text + "\"");
        }
        rad_sign = connector == '-' ? -1 : 1;
        head.pop_back();
        if (!head.empty()) {
            rat_part = parse_rat_token(head);
        }
    }
    if (rad_sign < 0) {
        coeff = -coeff;
    }
    return QField(rat_part, coeff, d);
}

Seq parse_seq(const std::string& text) {
    const std::string t = strip_spaces(text);
    if (t.empty()) {
        throw parse_error("empty sequence");
    }
    std::vector<QField> values;
    std::size_t start = 0;
    for (;;) {
        const auto comma = t.find(',', start);
        const std::string token =
            comma == std::string::npos ? t.substr(start) : t.substr(start, comma - start);
        values.push_back(parse_qf(token));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return Seq(std::move(values));
}

std::string parity_name(Parity p) {
    return p == Parity::even ? "even" : "odd";
}

Parity parse_parity(const std::string& text) {
    const std::string t = strip_spaces(text);
    if (t == "even") {
        return Parity::even;
    }
    if (t == "odd") {
        return Parity::odd;
    }
    throw parse_error("parity must be \"even\" or \"odd\", got \"" + text + "\"");
}

Json symseq_to_json(const SymSeq& s) {
    Json core = Json::array();
    for (const QField& x : s.core) {
        core.push_back(format_qf(x));
    }
    return Json{{"core", std::move(core)}, {"parity", parity_name(s.parity)}};
}

SymSeq symseq_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("core") || !j.contains("parity") ||
        !j["core"].is_array() || !j["parity"].is_string()) {
        throw parse_error("symmetric sequence JSON must be {\"core\": [...], \"parity\": ...}");
    }
    SymSeq s;
    s.parity = parse_parity(j["parity"].get<std::string>());
    for (const Json& entry : j["core"]) {
        if (!entry.is_string()) {
            throw parse_error("core entries must be strings in the exact text form");
        }
        s.core.push_back(parse_qf(entry.get<std::string>()));
    }
    return s;
}

namespace {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::certified:
            return "certified";
        case Verdict::refuted:
            return "refuted";
        case Verdict::inconclusive:
            return "inconclusive";
    }
    throw error("unknown verdict");
}

std::string criterion_name(Criterion c) {
    switch (c) {
        case Criterion::r0_classic:
            return "r0_classic";
        case Criterion::r1_generalized:
            return "r1_generalized";
        case Criterion::symmetric_lemma:
            return "symmetric_lemma";
    }
    throw error("unknown criterion");
}

std::string outcome_name(OrbitScan::Outcome o) {
    switch (o) {
        case OrbitScan::Outcome::reached:
            return "reached";
        case OrbitScan::Outcome::refuted:
            return "refuted";
        case OrbitScan::Outcome::not_reached:
            return "not_reached";
    }
    throw error("unknown outcome");
}

Json failing_to_json(const std::optional<Failing>& f) {
    if (!f) {
        return nullptr;
    }
    return Json{{"iteration", f->iteration}, {"index", f->index}};
}

}  // namespace

Json certificate_to_json(const Certificate& c) {
    return Json{{"verdict", verdict_name(c.verdict)},
                {"criterion", criterion_name(c.criterion)},
                {"r", format_qf(c.r_used)},
                {"iterations", c.iterations_applied},
                {"failing", failing_to_json(c.failing)}};
}

Json orbit_scan_to_json(const OrbitScan& s) {
    return Json{{"outcome", outcome_name(s.outcome)},
                {"iterations", s.iterations},
                {"failing", failing_to_json(s.failing)}};
}

Json row_report_to_json(const RowReport& rep, bool include_timings) {
    Json j{{"n", rep.n},
           {"classic", rep.classic ? certificate_to_json(*rep.classic) : Json(nullptr)},
           {"comparative",
            rep.comparative ? orbit_scan_to_json(*rep.comparative) : Json(nullptr)},
           {"generalized",
            rep.generalized ? certificate_to_json(*rep.generalized) : Json(nullptr)}};
    if (include_timings) {
        j["wall_ms"] = rep.wall_ms;
    }
    return j;
}

}  // namespace logcave
