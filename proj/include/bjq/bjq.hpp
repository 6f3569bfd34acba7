#pragma once

#include "bjq/basic_operators.hpp"
#include "bjq/classical.hpp"
#include "bjq/dynamics.hpp"
#include "bjq/errors.hpp"
#include "bjq/expression.hpp"
#include "bjq/grid.hpp"
#include "bjq/io.hpp"
#include "bjq/kernel.hpp"
#include "bjq/ncpoly.hpp"
#include "bjq/ncpoly_io.hpp"
#include "bjq/phase_space.hpp"
#include "bjq/quantize.hpp"
#include "bjq/symbol.hpp"
