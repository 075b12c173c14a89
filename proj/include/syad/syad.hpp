#pragma once

#include "syad/cli.hpp"
#include "syad/dsl/ast.hpp"
#include "syad/dsl/eval.hpp"
#include "syad/dsl/lexer.hpp"
#include "syad/dsl/parser.hpp"
#include "syad/errors.hpp"
#include "syad/format.hpp"
#include "syad/fuzzy.hpp"
#include "syad/inference.hpp"
#include "syad/relation.hpp"
#include "syad/saptabhangi.hpp"
