#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ostat::io::detail {

inline std::string real_text(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Minimal streaming JSON emitter; reals always get 17 significant digits.
class JsonOut {
public:
    JsonOut& begin_object() { open('{'); return *this; }
    JsonOut& end_object() { close('}'); return *this; }
    JsonOut& begin_array() { open('['); return *this; }
    JsonOut& end_array() { close(']'); return *this; }

    JsonOut& key(std::string_view k) {
        separator();
        string_literal(k);
        out_ += ':';
        pending_key_ = true;
        return *this;
    }

    JsonOut& value(double v) {
        separator();
        if (std::isfinite(v)) out_ += real_text(v);
        else string_literal(real_text(v));
        return *this;
    }
    JsonOut& value(std::uint64_t v) { separator(); out_ += std::to_string(v); return *this; }
    JsonOut& value(int v) { separator(); out_ += std::to_string(v); return *this; }
    JsonOut& value(bool v) { separator(); out_ += v ? "true" : "false"; return *this; }
    JsonOut& value(std::string_view v) { separator(); string_literal(v); return *this; }
    JsonOut& value(const char* v) { return value(std::string_view(v)); }
    JsonOut& null() { separator(); out_ += "null"; return *this; }

    template <class T>
    JsonOut& field(std::string_view k, const T& v) {
        key(k);
        return value(v);
    }

    std::string str() const { return out_ + "\n"; }

private:
    void separator() {
        if (pending_key_) {
            pending_key_ = false;
            return;
        }
        if (!first_.empty()) {
            if (!first_.back()) out_ += ',';
            first_.back() = false;
        }
    }
    void open(char c) {
        separator();
        out_ += c;
        first_.push_back(true);
    }
    void close(char c) {
        first_.pop_back();
        out_ += c;
    }
    void string_literal(std::string_view s) { out_ += nlohmann::json(std::string(s)).dump(); }

    std::string out_;
    std::vector<bool> first_;
    bool pending_key_ = false;
};

inline double read_real(const nlohmann::json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return HUGE_VAL;
        if (s == "-inf") return -HUGE_VAL;
        if (s == "nan") return std::nan("");
    }
    return j.get<double>();
}

} // namespace ostat::io::detail
