// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/rdf/iri.h"

#include <cctype>
#include <vector>

namespace owlfol::rdf {

namespace {

struct Parts {
  std::string_view scheme, authority, path, query, fragment;
  bool has_authority = false, has_query = false, has_fragment = false;
};

Parts split(std::string_view s) {
  Parts p;
  if (has_scheme(s)) {
    auto colon = s.find(':');
    p.scheme = s.substr(0, colon);
    s.remove_prefix(colon + 1);
  }
  if (auto hash = s.find('#'); hash != std::string_view::npos) {
    p.has_fragment = true;
    p.fragment = s.substr(hash + 1);
    s = s.substr(0, hash);
  }
  if (auto q = s.find('?'); q != std::string_view::npos) {
    p.has_query = true;
    p.query = s.substr(q + 1);
    s = s.substr(0, q);
  }
  if (s.substr(0, 2) == "//") {
    p.has_authority = true;
    s.remove_prefix(2);
    auto slash = s.find('/');
    p.authority = s.substr(0, slash);
    s = slash == std::string_view::npos ? std::string_view() : s.substr(slash);
  }
  p.path = s;
  return p;
}

std::string remove_dot_segments(std::string_view path) {
  std::vector<std::string> out;
  const bool absolute = !path.empty() && path.front() == '/';
  std::size_t pos = absolute ? 1 : 0;
  bool trailing_slash = false;
  while (pos <= path.size()) {
    auto next = path.find('/', pos);
    std::string_view seg = path.substr(
        pos, next == std::string_view::npos ? std::string_view::npos
                                            : next - pos);
    trailing_slash = false;
    if (seg == "..") {
      if (!out.empty()) out.pop_back();
      trailing_slash = true;
    } else if (seg == ".") {
      trailing_slash = true;
    } else {
      out.emplace_back(seg);
    }
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  std::string result = absolute ? "/" : "";
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i) result += '/';
    result += out[i];
  }
  if (trailing_slash && !result.empty() && result.back() != '/') result += '/';
  return result;
}

std::string compose(std::string_view scheme, bool has_authority,
                    std::string_view authority, std::string_view path,
                    bool has_query, std::string_view query, bool has_fragment,
                    std::string_view fragment) {
  std::string r;
  if (!scheme.empty()) {
    r += scheme;
    r += ':';
  }
  if (has_authority) {
    r += "//";
    r += authority;
  }
  r += path;
  if (has_query) {
    r += '?';
    r += query;
  }
  if (has_fragment) {
    r += '#';
    r += fragment;
  }
  return r;
}

}  // namespace

bool has_scheme(std::string_view iri) {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) {
    return false;
  }
  for (char c : iri) {
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' &&
        c != '.') {
      return false;
    }
  }
  return false;
}

std::string resolve_iri(std::string_view base, std::string_view ref) {
  Parts r = split(ref);
  if (!r.scheme.empty()) {
    return compose(r.scheme, r.has_authority, r.authority,
                   remove_dot_segments(r.path), r.has_query, r.query,
                   r.has_fragment, r.fragment);
  }
  Parts b = split(base);
  if (r.has_authority) {
    return compose(b.scheme, true, r.authority, remove_dot_segments(r.path),
                   r.has_query, r.query, r.has_fragment, r.fragment);
  }
  std::string path;
  bool has_query = r.has_query;
  std::string_view query = r.query;
  if (r.path.empty()) {
    path = std::string(b.path);
    if (!r.has_query) {
      has_query = b.has_query;
      query = b.query;
    }
  } else if (r.path.front() == '/') {
    path = remove_dot_segments(r.path);
  } else {
    std::string merged;
    if (b.has_authority && b.path.empty()) {
      merged = "/" + std::string(r.path);
    } else {
      auto slash = b.path.rfind('/');
      merged = slash == std::string_view::npos
                   ? std::string(r.path)
                   : std::string(b.path.substr(0, slash + 1)) +
                         std::string(r.path);
    }
    path = remove_dot_segments(merged);
  }
  return compose(b.scheme, b.has_authority, b.authority, path, has_query,
                 query, r.has_fragment, r.fragment);
}

}  // namespace owlfol::rdf
