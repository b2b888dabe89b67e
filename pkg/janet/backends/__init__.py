from janet.backends.input_syntax import InputDocument, IDEAL_KIND, COMPLEX_KIND
from janet.backends.input_syntax import DIGITS, LIST
from janet.backends.input_syntax import parse_ideal, parse_complex
from janet.backends.input_syntax import parse_complex_document, parse_document
from janet.backends.input_syntax import render_ideal, render_complex
from janet.backends.input_syntax import format_face
from janet.backends.text_backend import TextWriter
from janet.backends.data_backend import DataWriter
