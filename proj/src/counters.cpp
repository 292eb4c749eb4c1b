#include "prodint/counters.hpp"

namespace prodint {

namespace {
thread_local op_counters *g_active = nullptr;
}

counter_scope::counter_scope(op_counters &c) : m_prev(g_active) {
  g_active = &c;
}

counter_scope::~counter_scope() { g_active = m_prev; }

op_counters *counter_scope::active() { return g_active; }

void count_op(const std::string &domain, const char *op) {
  if (g_active)
    g_active->bump(domain + "." + op);
}

} // namespace prodint
