#include "spherint/curve.hpp"

namespace spherint {

const char* method_name(Method m) {
    switch (m) {
        case Method::slerp: return "slerp";
        case Method::squad: return "squad";
        case Method::sider2: return "sider2";
        case Method::sider3: return "sider3";
        case Method::sider4: return "sider4";
        case Method::seno2: return "seno2";
        case Method::seno3: return "seno3";
    }
    return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "slerp") return Method::slerp;
    if (name == "squad") return Method::squad;
    if (name == "sider2") return Method::sider2;
    if (name == "sider3") return Method::sider3;
    if (name == "sider4") return Method::sider4;
    if (name == "seno2") return Method::seno2;
    if (name == "seno3") return Method::seno3;
    return std::nullopt;
}

} // namespace spherint
