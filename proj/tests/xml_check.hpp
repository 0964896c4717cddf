#pragma once

// Minimal structural XML well-formedness check for the SVG tests: tags must
// nest properly, attributes must be quoted, and there is one root element.

#include <cctype>
#include <string>
#include <vector>

namespace xmlcheck {

struct Result {
    bool ok;
    std::string detail;
};

inline Result check(const std::string& text) {
    std::vector<std::string> stack;
    bool saw_root = false;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        std::size_t close = text.find('>', i);
        if (close == std::string::npos) {
            return {false, "unterminated tag at offset " + std::to_string(i)};
        }
        std::string tag = text.substr(i + 1, close - i - 1);
        i = close + 1;
        if (tag.empty()) {
            return {false, "empty tag"};
        }
        if (tag.front() == '?') {
            if (tag.back() != '?') {
                return {false, "malformed declaration"};
            }
            continue;
        }
        if (tag.front() == '!') {
            continue;  // comment or doctype
        }
        // Quotes must be balanced inside the tag.
        int quotes = 0;
        for (char c : tag) {
            if (c == '"') {
                ++quotes;
            }
        }
        if (quotes % 2 != 0) {
            return {false, "unbalanced attribute quotes in <" + tag + ">"};
        }
        if (tag.front() == '/') {
            const std::string name = tag.substr(1);
            if (stack.empty()) {
                return {false, "closing tag </" + name + "> with no open element"};
            }
            if (stack.back() != name) {
                return {false, "expected </" + stack.back() + ">, got </" + name + ">"};
            }
            stack.pop_back();
            continue;
        }
        const bool self_closing = (tag.back() == '/');
        std::string name;
        for (char c : tag) {
            if (std::isspace(static_cast<unsigned char>(c)) || c == '/') {
                break;
            }
            name.push_back(c);
        }
        if (name.empty()) {
            return {false, "tag with empty name"};
        }
        if (stack.empty()) {
            if (saw_root && !self_closing) {
                return {false, "multiple root elements"};
            }
            saw_root = true;
        }
        if (!self_closing) {
            stack.push_back(name);
        }
    }
    if (!stack.empty()) {
        return {false, "unclosed element <" + stack.back() + ">"};
    }
    if (!saw_root) {
        return {false, "no root element"};
    }
    return {true, ""};
}

}  // namespace xmlcheck
