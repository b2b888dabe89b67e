#=========================================================================
# errors.py
#=========================================================================
# Exception hierarchy. Messages follow the "<function> -- <message>"
# convention so the origin of a failure is visible without a traceback.
#

class JanetError( Exception ):
  """Base class of every error raised by janet."""

class ArityError( JanetError, ValueError ):
  """Objects of different arity were combined, or arity 0 where >= 1."""

class UndefinedError( JanetError, ValueError ):
  """A statistic or construction is undefined for the given input."""

class VertexError( JanetError, ValueError ):
  """A vertex or variable index lies outside 1..n."""

class TargetError( JanetError, ValueError ):
  """A decomposition was checked against the wrong target or ideal."""

class ParseError( JanetError ):
  """Malformed input document, with 1-based line and column."""

  def __init__( s, msg, line, column ):
    s.msg    = msg
    s.line   = line
    s.column = column
    super().__init__( 'line {}, column {}: {}'.format( line, column, msg ) )
