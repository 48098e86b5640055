// Doc-test hooks for the book chapters live here (filled in with the book).
