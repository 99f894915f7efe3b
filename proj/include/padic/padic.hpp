#pragma once

#include "padic/dragon.hpp"
#include "padic/fractal.hpp"
#include "padic/io.hpp"
#include "padic/report.hpp"
#include "padic/sieve.hpp"
#include "padic/turtle.hpp"
#include "padic/valuation.hpp"
#include "padic/verify.hpp"
