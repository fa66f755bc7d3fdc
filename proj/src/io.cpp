#include "diffcech/io.hpp"

#include "diffcech/errors.hpp"
#include "diffcech/expr.hpp"
#include "diffcech/gallery.hpp"

#include <fstream>
#include <sstream>

namespace diffcech {

namespace {

constexpr const char* kGalleryPrefix = "gallery:";

bool is_gallery_ref(const std::string& s) { return s.rfind(kGalleryPrefix, 0) == 0; }

std::string text_of(const Json& v, const std::string& path) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError(path, "expected a string or an integer");
}

/// "(0,1,2)" -> {0,1,2}
Tuple parse_tuple(const std::string& key, const std::string& path) {
    if (key.size() < 2 || key.front() != '(' || key.back() != ')') throw ParseError(path, "expected a tuple like \"(0,1)\"");
    Tuple t;
    std::stringstream ss(key.substr(1, key.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            t.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError(path, "bad chart index \"" + item + "\"");
        }
    }
    return t;
}

/// "([1,0],[0,2])" -> {{1,0},{0,2}}
Kappas parse_kappas(const std::string& key, std::size_t rank, const std::string& path) {
    if (key.size() < 2 || key.front() != '(' || key.back() != ')') throw ParseError(path, "expected a key like \"([1,0])\"");
    Kappas out;
    const std::string body = key.substr(1, key.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
        if (body[pos] == ',') {
            ++pos;
            continue;
        }
        if (body[pos] != '[') throw ParseError(path, "expected '[' in \"" + key + "\"");
        const std::size_t close = body.find(']', pos);
        if (close == std::string::npos) throw ParseError(path, "unbalanced '[' in \"" + key + "\"");
        KElement e;
        std::stringstream ss(body.substr(pos + 1, close - pos - 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                e.push_back(std::stol(item));
            } catch (const std::exception&) {
                throw ParseError(path, "bad group coordinate \"" + item + "\"");
            }
        }
        if (e.size() != rank) throw ParseError(path, "group elements need " + std::to_string(rank) + " coordinates");
        out.push_back(e);
        pos = close + 1;
    }
    return out;
}

MPoly polynomial_in_class(const Json& v, const FunctionClass& cls, const std::string& path) {
    MPoly h;
    try {
        h = parse_polynomial_expression(text_of(v, path));
    } catch (const ParseError& e) {
        throw ParseError(path, e.what());
    }
    if (!cls.contains(h)) throw ParseError(path, "\"" + h.str() + "\" lies outside the function class " + cls.str());
    return h;
}

} // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        if (auto p = msg.find("parse error"); p != std::string::npos) msg = msg.substr(p);
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col), msg);
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

PresentationPtr presentation_from_value(const Json& j, const std::string& path) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (!is_gallery_ref(s)) throw ParseError(path, "expected a presentation or \"gallery:NAME\"");
        return gallery_entry(s.substr(std::string(kGalleryPrefix).size())).presentation;
    }
    if (!j.is_object()) throw ParseError(path, "expected a presentation object");
    return std::make_shared<const Presentation>(presentation_from_json(j, path));
}

Json cochain_to_json(const Cochain& c) {
    Json j = Json::object();
    j["degree"] = c.degree();
    if (c.on_nerve()) {
        Json vals = Json::object();
        const auto& ts = c.presentation()->nerve().tuples_unchecked(c.degree());
        for (std::size_t i = 0; i < ts.size(); ++i)
            if (!c.values()[i].is_zero()) vals[tuple_str(ts[i])] = c.values()[i].str();
        j["values"] = vals;
        return j;
    }
    const GroupQuotient& q = c.presentation()->quotient();
    if (c.degree() == 0) {
        j["function"] = c.component({}).str();
        return j;
    }
    if (q.finite()) {
        Json vals = Json::object();
        for (const auto& ks : all_kappas(q, c.degree())) vals[kappas_str(ks)] = c.component(ks).str();
        j["table"] = vals;
        return j;
    }
    if (c.degree() != 1) throw UnsupportedError("cochains of degree >= 2 on an infinite K have no file form");
    Json vals = Json::object();
    for (std::size_t i = 0; i < q.rank(); ++i) vals["g" + std::to_string(i + 1)] = c.component({q.generator(i)}).str();
    j["crossed"] = vals;
    return j;
}

Cochain cochain_from_json(const Json& j, const PresentationPtr& p, const GroupTag& tag, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected a cochain object");
    const Json& dj = require(j, "degree", path);
    if (!dj.is_number_integer() || dj.get<int>() < 0) throw ParseError(join_path(path, "degree"), "expected a non-negative integer");
    const int k = dj.get<int>();
    if (k > p->k_max()) throw ParseError(join_path(path, "degree"), "exceeds k_max = " + std::to_string(p->k_max()));
    if (p->is_nerve()) {
        const FiniteNerve& n = p->nerve();
        std::vector<GroupElement> vals(n.num_tuples(k), GroupElement::zero(tag));
        const std::string vp = join_path(path, "values");
        const Json& vj = require(j, "values", path);
        if (!vj.is_object()) throw ParseError(vp, "expected an object keyed by tuples");
        for (const auto& [key, v] : vj.items()) {
            const std::string fp = vp + "[" + key + "]";
            const Tuple t = parse_tuple(key, fp);
            if (static_cast<int>(t.size()) != k + 1)
                throw ParseError(fp, "degree-" + std::to_string(k) + " cochains take " + std::to_string(k + 1) + "-tuples");
            auto idx = n.index_of(t);
            if (!idx) throw ParseError(fp, "tuple " + tuple_str(t) + " is not a listed tuple of the nerve");
            try {
                vals[*idx] = GroupElement::parse(tag, text_of(v, fp));
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(fp, e.what());
            }
        }
        return Cochain::nerve(p, tag, k, std::move(vals));
    }
    if (tag.kind != GroupKind::Reals) throw ParseError("group", "quotient cochains take values in R(alpha)");
    const GroupQuotient& q = p->quotient();
    const FunctionClass cls = q.function_class();
    if (k == 0) return Cochain::function(p, polynomial_in_class(require(j, "function", path), cls, join_path(path, "function")));
    if (q.finite()) {
        const std::string tp = join_path(path, "table");
        const Json& tj = require(j, "table", path);
        if (!tj.is_object()) throw ParseError(tp, "expected an object keyed by group tuples");
        std::map<Kappas, MPoly> vals;
        for (const auto& ks : all_kappas(q, k)) vals[ks] = MPoly();
        for (const auto& [key, v] : tj.items()) {
            const std::string fp = tp + "[" + key + "]";
            Kappas ks = parse_kappas(key, q.rank(), fp);
            if (static_cast<int>(ks.size()) != k) throw ParseError(fp, "expected " + std::to_string(k) + " group elements");
            for (auto& e : ks) e = q.reduce(e);
            vals[ks] = polynomial_in_class(v, cls, fp);
        }
        return Cochain::table(p, k, std::move(vals));
    }
    if (k != 1) throw ParseError(join_path(path, "degree"), "infinite K cochains are read in degrees 0 and 1");
    const std::string cp = join_path(path, "crossed");
    const Json& cj = require(j, "crossed", path);
    if (!cj.is_object()) throw ParseError(cp, "expected {\"g1\": ..., ...}");
    std::vector<MPoly> gens(q.rank());
    for (const auto& [key, v] : cj.items()) {
        std::size_t i = 0;
        if (key.size() < 2 || key[0] != 'g' || (i = std::strtoul(key.c_str() + 1, nullptr, 10)) < 1 || i > q.rank())
            throw ParseError(cp + "[" + key + "]", "expected g1 .. g" + std::to_string(q.rank()));
        gens[i - 1] = polynomial_in_class(v, cls, cp + "[" + key + "]");
    }
    return Cochain::crossed(p, std::move(gens));
}

Json crossed_to_json(const CrossedHom& beta) {
    Json vals = Json::object();
    for (std::size_t i = 0; i < beta.values().size(); ++i) vals["g" + std::to_string(i + 1)] = beta.values()[i].str();
    return Json{{"values", vals}};
}

CrossedHom crossed_from_json(const Json& j, const PresentationPtr& p, const std::string& path) {
    Json c = {{"degree", 1}, {"crossed", require(j, "values", path)}};
    if (p->is_quotient() && p->quotient().finite()) {
        const GroupQuotient& q = p->quotient();
        std::vector<MPoly> gens(q.rank());
        const FunctionClass cls = q.function_class();
        for (const auto& [key, v] : j["values"].items()) {
            std::size_t i = key.size() > 1 && key[0] == 'g' ? std::strtoul(key.c_str() + 1, nullptr, 10) : 0;
            if (i < 1 || i > q.rank()) throw ParseError(join_path(path, "values") + "[" + key + "]", "unknown generator");
            gens[i - 1] = polynomial_in_class(v, cls, join_path(path, "values") + "[" + key + "]");
        }
        return CrossedHom(p, std::move(gens));
    }
    const Cochain f = cochain_from_json(c, p, GroupTag::reals(), path);
    return CrossedHom(p, std::get<CrossedData>(f.payload()).values);
}

Json bundle_to_json(const BundlePresentation& b) {
    return Json{{"base", presentation_to_json(*b.base())}, {"group", b.group().str()}, {"cocycle", cochain_to_json(b.cocycle())}};
}

Document load_document(const std::string& ref) {
    Document doc;
    doc.source = ref;
    if (is_gallery_ref(ref)) {
        GalleryEntry e = gallery_entry(ref.substr(std::string(kGalleryPrefix).size()));
        doc.presentation = e.presentation;
        if (e.cocycle) {
            doc.cochain = e.cocycle;
            doc.group = e.cocycle->tag();
            doc.is_bundle = true;
        }
        return doc;
    }
    const Json j = read_json_file(ref);
    if (!j.is_object()) throw ParseError(ref, "expected a JSON object");
    if (j.contains("kind")) {
        doc.presentation = presentation_from_value(j, "");
        return doc;
    }
    doc.presentation = presentation_from_value(require(j, "base", ""), "base");
    const Json& gj = require(j, "group", "");
    if (!gj.is_string()) throw ParseError("group", "expected a group tag");
    try {
        doc.group = GroupTag::parse(gj.get<std::string>());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError("group", e.what());
    }
    const bool has_cocycle = j.contains("cocycle"), has_cochain = j.contains("cochain");
    if (has_cocycle == has_cochain) throw ParseError("cocycle", "give exactly one of \"cocycle\" or \"cochain\"");
    doc.is_bundle = has_cocycle;
    const std::string key = has_cocycle ? "cocycle" : "cochain";
    doc.cochain = cochain_from_json(j[key], doc.presentation, *doc.group, key);
    return doc;
}

} // namespace diffcech
