#include "record.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lenscf {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string longs_str(const std::vector<long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

// ---------- JSON writing ----------

void put_word(std::ostream& os, const Word& w) {
    os << '[';
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i].get_str();
    }
    os << ']';
}

void put_longs(std::ostream& os, const std::vector<long>& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
}

void put_string(std::ostream& os, const std::string& s) {
    os << '"';
    for (char c : s) {
        switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            case '\r': os << "\\r"; break;
            default: os << c;
        }
    }
    os << '"';
}

// ---------- JSON parsing ----------
// Only what the record schema needs: objects, arrays, strings, booleans, and
// arbitrary-width decimal integers. Everything else is rejected.

struct JsonValue {
    enum class Kind { Num, Bool, Str, Arr, Obj };
    Kind kind = Kind::Num;
    Int num;
    bool b = false;
    std::string str;
    std::vector<JsonValue> arr;
    std::vector<std::pair<std::string, JsonValue>> obj;
};

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw std::runtime_error("record_from_json: " + why + " at byte " +
                                 std::to_string(i));
    }
    void skip_ws() {
        while (i < s.size() &&
               (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r'))
            ++i;
    }
    char peek() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input");
        return s[i];
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++i;
    }
    bool try_consume(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
};

std::string parse_string_raw(Cursor& c) {
    c.expect('"');
    std::string out;
    while (true) {
        if (c.i >= c.s.size()) c.fail("unterminated string");
        char ch = c.s[c.i++];
        if (ch == '"') break;
        if (ch == '\\') {
            if (c.i >= c.s.size()) c.fail("truncated escape");
            char e = c.s[c.i++];
            switch (e) {
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case '/': out += '/'; break;
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                case 'r': out += '\r'; break;
                default: c.fail("unsupported escape");
            }
        } else {
            out += ch;
        }
    }
    return out;
}

JsonValue parse_value(Cursor& c);

JsonValue parse_number(Cursor& c) {
    c.skip_ws();
    std::string digits;
    if (c.i < c.s.size() && c.s[c.i] == '-') {
        digits += '-';
        ++c.i;
    }
    std::size_t start = digits.size();
    while (c.i < c.s.size() && c.s[c.i] >= '0' && c.s[c.i] <= '9')
        digits += c.s[c.i++];
    if (digits.size() == start) c.fail("expected digits");
    if (digits.size() - start > 1 && digits[start] == '0')
        c.fail("leading zero");
    if (c.i < c.s.size() &&
        (c.s[c.i] == '.' || c.s[c.i] == 'e' || c.s[c.i] == 'E'))
        c.fail("non-integer number");
    JsonValue v;
    v.kind = JsonValue::Kind::Num;
    v.num = Int(digits, 10);
    return v;
}

JsonValue parse_value(Cursor& c) {
    char ch = c.peek();
    JsonValue v;
    if (ch == '{') {
        ++c.i;
        v.kind = JsonValue::Kind::Obj;
        if (!c.try_consume('}')) {
            do {
                std::string key = parse_string_raw(c);
                c.expect(':');
                v.obj.emplace_back(std::move(key), parse_value(c));
            } while (c.try_consume(','));
            c.expect('}');
        }
        return v;
    }
    if (ch == '[') {
        ++c.i;
        v.kind = JsonValue::Kind::Arr;
        if (!c.try_consume(']')) {
            do {
                v.arr.push_back(parse_value(c));
            } while (c.try_consume(','));
            c.expect(']');
        }
        return v;
    }
    if (ch == '"') {
        v.kind = JsonValue::Kind::Str;
        v.str = parse_string_raw(c);
        return v;
    }
    if (ch == 't' || ch == 'f') {
        const std::string lit = ch == 't' ? "true" : "false";
        if (c.s.compare(c.i, lit.size(), lit) != 0) c.fail("bad literal");
        c.i += lit.size();
        v.kind = JsonValue::Kind::Bool;
        v.b = (ch == 't');
        return v;
    }
    if (ch == '-' || (ch >= '0' && ch <= '9')) return parse_number(c);
    c.fail("unexpected character");
}

[[noreturn]] void type_fail(const std::string& key) {
    throw std::runtime_error("record_from_json: wrong type for \"" + key + "\"");
}

Int to_int(const JsonValue& v, const std::string& key) {
    if (v.kind != JsonValue::Kind::Num) type_fail(key);
    return v.num;
}

long to_long(const JsonValue& v, const std::string& key) {
    if (v.kind != JsonValue::Kind::Num || !v.num.fits_slong_p()) type_fail(key);
    return v.num.get_si();
}

bool to_bool(const JsonValue& v, const std::string& key) {
    if (v.kind != JsonValue::Kind::Bool) type_fail(key);
    return v.b;
}

std::string to_string(const JsonValue& v, const std::string& key) {
    if (v.kind != JsonValue::Kind::Str) type_fail(key);
    return v.str;
}

Word to_word(const JsonValue& v, const std::string& key) {
    if (v.kind != JsonValue::Kind::Arr) type_fail(key);
    Word w;
    for (const auto& e : v.arr) w.push_back(to_int(e, key));
    return w;
}

std::vector<long> to_longs(const JsonValue& v, const std::string& key) {
    if (v.kind != JsonValue::Kind::Arr) type_fail(key);
    std::vector<long> out;
    for (const auto& e : v.arr) out.push_back(to_long(e, key));
    return out;
}

FillingRecord filling_from_value(const JsonValue& v) {
    if (v.kind != JsonValue::Kind::Obj) type_fail("fillings[]");
    FillingRecord f;
    int seen = 0;
    for (const auto& [key, val] : v.obj) {
        if (key == "n") f.n = to_word(val, key);
        else if (key == "rank_h2") f.rank_h2 = to_int(val, key);
        else if (key == "is_artin") f.is_artin = to_bool(val, key);
        else if (key == "is_rational_homology_ball")
            f.is_rational_homology_ball = to_bool(val, key);
        else if (key == "witness") f.witness = to_longs(val, key);
        else throw std::runtime_error("record_from_json: unknown filling key \"" + key + "\"");
        ++seen;
    }
    if (seen != 5)
        throw std::runtime_error("record_from_json: filling with missing or duplicate keys");
    return f;
}

}  // namespace

CatalogueRecord record_from_atlas(const Atlas& a) {
    CatalogueRecord r;
    r.p = a.lens.p;
    r.q = a.lens.q;
    r.k = a.lens.k;
    r.h = a.lens.h;
    r.b_string = a.lens.b_string;
    r.a_string = a.lens.a_string;
    for (const auto& f : a.fillings) {
        FillingRecord fr;
        fr.n = f.n;
        fr.rank_h2 = f.rank_h2;
        fr.is_artin = f.is_artin;
        fr.is_rational_homology_ball = f.is_rational_homology_ball;
        fr.witness = f.witness.steps;
        r.fillings.push_back(std::move(fr));
    }
    r.unique_up_to_blowup = a.unique_up_to_blowup;
    r.kollar_certified = a.kollar_certified;
    r.nrs_members = a.nrs_members;
    r.filling_count_lower_bound = a.filling_count_lower_bound;
    return r;
}

std::string record_json(const CatalogueRecord& rec) {
    std::ostringstream os;
    os << "{\"p\":" << rec.p.get_str() << ",\"q\":" << rec.q.get_str()
       << ",\"k\":" << rec.k << ",\"h\":" << rec.h << ",\"b_string\":";
    put_word(os, rec.b_string);
    os << ",\"a_string\":";
    put_word(os, rec.a_string);
    os << ",\"fillings\":[";
    for (std::size_t i = 0; i < rec.fillings.size(); ++i) {
        if (i) os << ',';
        const auto& f = rec.fillings[i];
        os << "{\"n\":";
        put_word(os, f.n);
        os << ",\"rank_h2\":" << f.rank_h2.get_str()
           << ",\"is_artin\":" << bool_str(f.is_artin)
           << ",\"is_rational_homology_ball\":"
           << bool_str(f.is_rational_homology_ball) << ",\"witness\":";
        put_longs(os, f.witness);
        os << '}';
    }
    os << "],\"unique_up_to_blowup\":" << bool_str(rec.unique_up_to_blowup)
       << ",\"kollar_certified\":" << bool_str(rec.kollar_certified)
       << ",\"nrs_members\":[";
    for (std::size_t i = 0; i < rec.nrs_members.size(); ++i) {
        if (i) os << ',';
        put_word(os, rec.nrs_members[i]);
    }
    os << "],\"filling_count_lower_bound\":" << rec.filling_count_lower_bound
       << ",\"tool_version\":";
    put_string(os, rec.tool_version);
    os << ",\"convention\":";
    put_string(os, rec.convention);
    os << '}';
    return os.str();
}

CatalogueRecord record_from_json(const std::string& line) {
    Cursor c{line};
    JsonValue root = parse_value(c);
    c.skip_ws();
    if (c.i != line.size()) c.fail("trailing bytes");
    if (root.kind != JsonValue::Kind::Obj)
        throw std::runtime_error("record_from_json: top level is not an object");

    CatalogueRecord r;
    int seen = 0;
    for (const auto& [key, val] : root.obj) {
        if (key == "p") r.p = to_int(val, key);
        else if (key == "q") r.q = to_int(val, key);
        else if (key == "k") r.k = to_long(val, key);
        else if (key == "h") r.h = to_long(val, key);
        else if (key == "b_string") r.b_string = to_word(val, key);
        else if (key == "a_string") r.a_string = to_word(val, key);
        else if (key == "fillings") {
            if (val.kind != JsonValue::Kind::Arr) type_fail(key);
            for (const auto& e : val.arr)
                r.fillings.push_back(filling_from_value(e));
        } else if (key == "unique_up_to_blowup")
            r.unique_up_to_blowup = to_bool(val, key);
        else if (key == "kollar_certified") r.kollar_certified = to_bool(val, key);
        else if (key == "nrs_members") {
            if (val.kind != JsonValue::Kind::Arr) type_fail(key);
            for (const auto& e : val.arr)
                r.nrs_members.push_back(to_word(e, key));
        } else if (key == "filling_count_lower_bound")
            r.filling_count_lower_bound = to_long(val, key);
        else if (key == "tool_version") r.tool_version = to_string(val, key);
        else if (key == "convention") r.convention = to_string(val, key);
        else throw std::runtime_error("record_from_json: unknown key \"" + key + "\"");
        ++seen;
    }
    if (seen != 13)
        throw std::runtime_error("record_from_json: missing or duplicate keys");
    return r;
}

std::string record_csv_header() {
    return "p,q,k,h,b_string,a_string,n,rank_h2,is_artin,"
           "is_rational_homology_ball,witness,unique_up_to_blowup,"
           "kollar_certified,nrs_members,filling_count_lower_bound,"
           "tool_version,convention";
}

std::string record_csv_rows(const CatalogueRecord& r) {
    std::string nrs;
    for (std::size_t i = 0; i < r.nrs_members.size(); ++i) {
        if (i) nrs += ';';
        nrs += word_str(r.nrs_members[i]);
    }
    std::ostringstream os;
    for (const auto& f : r.fillings) {
        os << r.p.get_str() << ',' << r.q.get_str() << ',' << r.k << ','
           << r.h << ',' << word_str(r.b_string) << ',' << word_str(r.a_string)
           << ',' << word_str(f.n) << ',' << f.rank_h2.get_str() << ','
           << bool_str(f.is_artin) << ','
           << bool_str(f.is_rational_homology_ball) << ','
           << longs_str(f.witness) << ',' << bool_str(r.unique_up_to_blowup)
           << ',' << bool_str(r.kollar_certified) << ',' << nrs << ','
           << r.filling_count_lower_bound << ',' << r.tool_version << ','
           << r.convention << '\n';
    }
    return os.str();
}

std::string record_table(const CatalogueRecord& r) {
    std::vector<std::pair<std::string, std::string>> head, tail;
    head.emplace_back("lens space",
                      "L(" + r.p.get_str() + "," + r.q.get_str() + ")");
    head.emplace_back("b-string (k=" + std::to_string(r.k) + ")",
                      word_str(r.b_string));
    head.emplace_back("a-string (h=" + std::to_string(r.h) + ")",
                      word_str(r.a_string));
    head.emplace_back("fillings", std::to_string(r.fillings.size()));

    std::string nrs;
    for (std::size_t i = 0; i < r.nrs_members.size(); ++i) {
        if (i) nrs += ' ';
        nrs += "(" + word_str(r.nrs_members[i]) + ")";
    }
    tail.emplace_back("unique up to blowup", r.unique_up_to_blowup ? "yes" : "no");
    tail.emplace_back("kollar certified", r.kollar_certified ? "yes" : "no");
    tail.emplace_back("nrs members", nrs.empty() ? "-" : nrs);
    tail.emplace_back("filling count lower bound",
                      std::to_string(r.filling_count_lower_bound));
    tail.emplace_back("tool version", r.tool_version);
    tail.emplace_back("convention", r.convention);

    std::size_t width = 0;
    for (const auto& [key, val] : head) width = std::max(width, key.size());
    for (const auto& [key, val] : tail) width = std::max(width, key.size());

    std::ostringstream os;
    auto put = [&](const std::pair<std::string, std::string>& kv) {
        os << kv.first << std::string(width - kv.first.size() + 2, ' ')
           << kv.second << '\n';
    };
    for (const auto& kv : head) put(kv);
    for (std::size_t i = 0; i < r.fillings.size(); ++i) {
        const auto& f = r.fillings[i];
        os << "  [" << (i + 1) << "] n=(" << word_str(f.n) << ")  rank_h2="
           << f.rank_h2.get_str();
        if (f.is_artin) os << "  artin";
        if (f.is_rational_homology_ball) os << "  rational-homology-ball";
        os << "  witness=[" << longs_str(f.witness) << "]\n";
    }
    for (const auto& kv : tail) put(kv);
    return os.str();
}

}  // namespace lenscf
