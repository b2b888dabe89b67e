from janet.utils.helpers import get_top_dir, read_text
from janet.utils.helpers import bold, red, green, eprint, set_color
from janet.utils.helpers import read_yaml, dump_yaml
from janet.utils.errors  import JanetError, ArityError, UndefinedError
from janet.utils.errors  import VertexError, TargetError, ParseError
from janet.utils.log     import setup_logging
