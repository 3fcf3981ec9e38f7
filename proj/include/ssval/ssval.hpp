#pragma once

#include "ssval/error.hpp"
#include "ssval/rational.hpp"
#include "ssval/field.hpp"
#include "ssval/poly.hpp"
#include "ssval/newton.hpp"
#include "ssval/curve.hpp"
#include "ssval/divpoly.hpp"
#include "ssval/formal_group.hpp"
#include "ssval/spectrum.hpp"
#include "ssval/sporadic.hpp"
#include "ssval/io.hpp"
#include "ssval/svg.hpp"
