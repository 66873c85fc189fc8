#ifndef GLP_GLP_HPP
#define GLP_GLP_HPP

#include "glp/arch_l.hpp"
#include "glp/errors.hpp"
#include "glp/infinity_types.hpp"
#include "glp/period_algebra.hpp"
#include "glp/period_group.hpp"
#include "glp/rational.hpp"
#include "glp/self_dual.hpp"
#include "glp/weil_real.hpp"
#include "glp/yoshida.hpp"

#endif
